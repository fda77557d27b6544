#include "liegeo/linalg.hpp"

#include "liegeo/errors.hpp"

namespace liegeo {

namespace {

// Reduces [a | rhs] in place; returns false when a pivot column is all zero.
bool eliminate(Matrix& a, Matrix& rhs) {
  const int n = a.rows();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
      for (int j = 0; j < rhs.cols(); ++j) std::swap(rhs(col, j), rhs(pivot, j));
    }
    const Rational inv = Rational(1) / a(col, col);
    for (int j = 0; j < n; ++j) a(col, j) *= inv;
    for (int j = 0; j < rhs.cols(); ++j) rhs(col, j) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (int j = 0; j < n; ++j) a(r, j) -= f * a(col, j);
      for (int j = 0; j < rhs.cols(); ++j) rhs(r, j) -= f * rhs(col, j);
    }
  }
  return true;
}

}  // namespace

Vector solve(const Matrix& a, const Vector& b) {
  if (a.rows() != a.cols() || a.rows() != b.dim())
    throw DimensionMismatch("solve: shape mismatch");
  Matrix work = a;
  Matrix rhs(a.rows(), 1);
  for (int i = 0; i < b.dim(); ++i) rhs(i, 0) = b[i];
  if (!eliminate(work, rhs)) throw SingularMatrix("solve: singular matrix");
  Vector x(a.rows());
  for (int i = 0; i < a.rows(); ++i) x[i] = rhs(i, 0);
  return x;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse: non-square matrix");
  Matrix work = a;
  Matrix rhs = Matrix::identity(a.rows());
  if (!eliminate(work, rhs)) throw SingularMatrix("inverse: singular matrix");
  return rhs;
}

Rational determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant: non-square matrix");
  Matrix work = a;
  const int n = work.rows();
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (work(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(work(col, j), work(pivot, j));
      det = -det;
    }
    det *= work(col, col);
    const Rational inv = Rational(1) / work(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (work(r, col) == 0) continue;
      const Rational f = work(r, col) * inv;
      for (int j = col; j < n; ++j) work(r, j) -= f * work(col, j);
    }
  }
  return det;
}

bool is_positive_definite(const Matrix& a) {
  for (int k = 1; k <= a.rows(); ++k) {
    Matrix minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor(i, j) = a(i, j);
    if (!(determinant(minor) > 0)) return false;
  }
  return true;
}

Fit2 solve_two_unknowns(const std::vector<std::array<Rational, 3>>& rows) {
  Fit2 out;
  int p1 = -1, p2 = -1;
  for (size_t r = 0; r < rows.size(); ++r) {
    const auto& [a, b, c] = rows[r];
    if (a == 0 && b == 0) continue;
    if (p1 < 0) {
      p1 = static_cast<int>(r);
      continue;
    }
    const auto& [a1, b1, c1] = rows[static_cast<size_t>(p1)];
    if (a1 * b - a * b1 != 0) {
      p2 = static_cast<int>(r);
      break;
    }
  }

  if (p1 < 0) {
    // No constraints on (x, y) at all; consistent iff every rhs vanishes.
    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r][2] != 0) {
        out.status = Fit2::Status::Inconsistent;
        out.witness_row = static_cast<int>(r);
        return out;
      }
    }
    out.status = Fit2::Status::Underdetermined;
    out.rank = 0;
    out.family = AffineLine{0, 0, 1, 0};
    return out;
  }

  if (p2 >= 0) {
    const auto& [a1, b1, c1] = rows[static_cast<size_t>(p1)];
    const auto& [a2, b2, c2] = rows[static_cast<size_t>(p2)];
    const Rational det = a1 * b2 - a2 * b1;
    out.x = (c1 * b2 - c2 * b1) / det;
    out.y = (a1 * c2 - a2 * c1) / det;
    out.rank = 2;
    for (size_t r = 0; r < rows.size(); ++r) {
      const auto& [a, b, c] = rows[r];
      if (a * out.x + b * out.y != c) {
        out.status = Fit2::Status::Inconsistent;
        out.witness_row = static_cast<int>(r);
        return out;
      }
    }
    out.status = Fit2::Status::Unique;
    return out;
  }

  // Rank 1: every nonzero row is proportional to the pivot row.
  const auto& [a1, b1, c1] = rows[static_cast<size_t>(p1)];
  AffineLine line;
  if (a1 != 0) {
    line = AffineLine{c1 / a1, 0, -b1 / a1, 1};
  } else {
    line = AffineLine{0, c1 / b1, 1, 0};
  }
  for (size_t r = 0; r < rows.size(); ++r) {
    const auto& [a, b, c] = rows[r];
    if (a * line.x0 + b * line.y0 != c) {
      out.status = Fit2::Status::Inconsistent;
      out.witness_row = static_cast<int>(r);
      return out;
    }
  }
  out.status = Fit2::Status::Underdetermined;
  out.rank = 1;
  out.x = line.x0;
  out.y = line.y0;
  out.family = line;
  return out;
}

}  // namespace liegeo
