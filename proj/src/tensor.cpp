#include "liegeo/tensor.hpp"

#include <algorithm>

#include "liegeo/errors.hpp"

namespace liegeo {

namespace {

void require_same_shape(int a, int b) {
  if (a != b) throw DimensionMismatch("tensor shape mismatch");
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace

Vector Vector::basis(int dim, int i) {
  Vector e(dim);
  e[i] = 1;
  return e;
}

bool Vector::is_zero() const { return all_zero(v_); }

Vector operator+(const Vector& a, const Vector& b) {
  require_same_shape(a.dim(), b.dim());
  Vector out(a.dim());
  for (int i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_shape(a.dim(), b.dim());
  Vector out(a.dim());
  for (int i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector operator*(const Rational& s, const Vector& a) {
  Vector out(a.dim());
  for (int i = 0; i < a.dim(); ++i) out[i] = s * a[i];
  return out;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const { return all_zero(a_); }

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a.rows(), b.rows());
  require_same_shape(a.cols(), b.cols());
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a.rows(), b.rows());
  require_same_shape(a.cols(), b.cols());
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_shape(a.cols(), b.rows());
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Vector operator*(const Matrix& a, const Vector& x) {
  require_same_shape(a.cols(), x.dim());
  Vector out(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

Matrix outer(const Vector& u, const Vector& v) {
  Matrix out(u.dim(), v.dim());
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < v.dim(); ++j) out(i, j) = u[i] * v[j];
  return out;
}

bool Tensor3::is_zero() const { return all_zero(a_); }

Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
  require_same_shape(a.dim(), b.dim());
  Tensor3 out(a.dim());
  for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
  return out;
}

Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
  require_same_shape(a.dim(), b.dim());
  Tensor3 out(a.dim());
  for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
  return out;
}

Tensor3 operator*(const Rational& s, const Tensor3& a) {
  Tensor3 out(a.dim());
  for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = s * a.a_[i];
  return out;
}

bool Tensor4::is_zero() const { return all_zero(a_); }

Tensor4 operator+(const Tensor4& a, const Tensor4& b) {
  require_same_shape(a.dim(), b.dim());
  Tensor4 out(a.dim());
  for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
  return out;
}

Tensor4 operator-(const Tensor4& a, const Tensor4& b) {
  require_same_shape(a.dim(), b.dim());
  Tensor4 out(a.dim());
  for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
  return out;
}

Tensor4 operator*(const Rational& s, const Tensor4& a) {
  Tensor4 out(a.dim());
  for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = s * a.a_[i];
  return out;
}

}  // namespace liegeo
