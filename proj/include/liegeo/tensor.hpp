#ifndef LIEGEO_TENSOR_HPP
#define LIEGEO_TENSOR_HPP

#include <vector>

#include "liegeo/rational.hpp"

namespace liegeo {

// Dense rational containers for frame components. Indices are 0-based
// internally; documents and reports use 1-based frame indices.

class Vector {
 public:
  Vector() = default;
  explicit Vector(int dim) : v_(static_cast<size_t>(dim)) {}
  static Vector basis(int dim, int i);

  int dim() const { return static_cast<int>(v_.size()); }
  Rational& operator[](int i) { return v_[static_cast<size_t>(i)]; }
  const Rational& operator[](int i) const { return v_[static_cast<size_t>(i)]; }

  bool is_zero() const;
  bool operator==(const Vector&) const = default;

  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  friend Vector operator*(const Rational& s, const Vector& a);

 private:
  std::vector<Rational> v_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  bool is_symmetric() const;
  Matrix transposed() const;
  bool operator==(const Matrix&) const = default;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

// Rank-one (0,2) tensor u ⊗ v: result(i,j) = u[i] * v[j].
Matrix outer(const Vector& u, const Vector& v);

class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim * dim) {}

  int dim() const { return dim_; }
  Rational& operator()(int i, int j, int k) {
    return a_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }
  const Rational& operator()(int i, int j, int k) const {
    return a_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }

  bool is_zero() const;
  bool operator==(const Tensor3&) const = default;

  friend Tensor3 operator+(const Tensor3& a, const Tensor3& b);
  friend Tensor3 operator-(const Tensor3& a, const Tensor3& b);
  friend Tensor3 operator*(const Rational& s, const Tensor3& a);

 private:
  int dim_ = 0;
  std::vector<Rational> a_;
};

class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim * dim * dim) {}

  int dim() const { return dim_; }
  Rational& operator()(int i, int j, int k, int l) {
    return a_[((static_cast<size_t>(i) * dim_ + j) * dim_ + k) * dim_ + l];
  }
  const Rational& operator()(int i, int j, int k, int l) const {
    return a_[((static_cast<size_t>(i) * dim_ + j) * dim_ + k) * dim_ + l];
  }

  bool is_zero() const;
  bool operator==(const Tensor4&) const = default;

  friend Tensor4 operator+(const Tensor4& a, const Tensor4& b);
  friend Tensor4 operator-(const Tensor4& a, const Tensor4& b);
  friend Tensor4 operator*(const Rational& s, const Tensor4& a);

 private:
  int dim_ = 0;
  std::vector<Rational> a_;
};

}  // namespace liegeo

#endif
