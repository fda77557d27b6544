#ifndef LIEGEO_LINALG_HPP
#define LIEGEO_LINALG_HPP

#include <array>
#include <optional>
#include <vector>

#include "liegeo/tensor.hpp"

namespace liegeo {

// Exact Gaussian elimination over the rationals. Throws SingularMatrix when
// no nonzero pivot exists.
Vector solve(const Matrix& a, const Vector& b);
Matrix inverse(const Matrix& a);
Rational determinant(const Matrix& a);

// Leading principal minors, all required strictly positive. Exact; assumes a
// is square and symmetric (callers check symmetry separately).
bool is_positive_definite(const Matrix& a);

// Exact solve of a stacked system rows[r] = (a, b, c) meaning a*x + b*y = c.
struct AffineLine {
  Rational x0, y0;  // particular solution
  Rational dx, dy;  // direction of the solution line (zero for a point)
};

struct Fit2 {
  enum class Status { Unique, Underdetermined, Inconsistent };
  Status status = Status::Underdetermined;
  int rank = 0;
  Rational x, y;                    // solution when Unique; a representative otherwise
  std::optional<AffineLine> family; // solution family when Underdetermined
  int witness_row = -1;             // first offending row when Inconsistent
};

Fit2 solve_two_unknowns(const std::vector<std::array<Rational, 3>>& rows);

}  // namespace liegeo

#endif
