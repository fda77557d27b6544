#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liegeo/errors.hpp"
#include "liegeo/linalg.hpp"

using namespace liegeo;

namespace {

Matrix from_rows(int n, std::initializer_list<std::initializer_list<int>> rows) {
  Matrix m(n, n);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("solve and inverse are exact") {
  const Matrix a = from_rows(3, {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  Vector b(3);
  b[0] = 1; b[1] = Rational(1, 2); b[2] = -3;
  const Vector x = solve(a, b);
  for (int i = 0; i < 3; ++i) {
    Rational s = 0;
    for (int j = 0; j < 3; ++j) s += a(i, j) * x[j];
    CHECK(s == b[i]);
  }
  CHECK(inverse(a) * a == Matrix::identity(3));
}

TEST_CASE("singular systems are rejected") {
  const Matrix s = from_rows(2, {{1, 2}, {2, 4}});
  CHECK_THROWS_AS(inverse(s), SingularMatrix);
  CHECK(determinant(s) == 0);
}

TEST_CASE("positive definiteness via exact minors") {
  CHECK(is_positive_definite(Matrix::identity(4)));
  CHECK(is_positive_definite(from_rows(2, {{2, 1}, {1, 1}})));
  CHECK_FALSE(is_positive_definite(from_rows(2, {{1, 2}, {2, 1}})));
  CHECK_FALSE(is_positive_definite(from_rows(1, {{0}})));
}

TEST_CASE("two-unknown solver: unique solution verified on every row") {
  std::vector<std::array<Rational, 3>> rows = {
      {1, 0, 5}, {0, 1, -2}, {1, 1, 3}, {2, -1, 12}};
  const Fit2 fit = solve_two_unknowns(rows);
  REQUIRE(fit.status == Fit2::Status::Unique);
  CHECK(fit.x == 5);
  CHECK(fit.y == -2);
  CHECK(fit.rank == 2);
}

TEST_CASE("two-unknown solver: inconsistency names the first bad row") {
  std::vector<std::array<Rational, 3>> rows = {{1, 0, 5}, {0, 1, -2}, {1, 1, 4}};
  const Fit2 fit = solve_two_unknowns(rows);
  REQUIRE(fit.status == Fit2::Status::Inconsistent);
  CHECK(fit.witness_row == 2);
}

TEST_CASE("two-unknown solver: rank-1 families keep the whole line") {
  std::vector<std::array<Rational, 3>> rows = {{1, 1, 3}, {2, 2, 6}};
  const Fit2 fit = solve_two_unknowns(rows);
  REQUIRE(fit.status == Fit2::Status::Underdetermined);
  REQUIRE(fit.family.has_value());
  CHECK(fit.rank == 1);
  // every point of the family solves every row
  for (int t = -2; t <= 2; ++t) {
    const Rational x = fit.family->x0 + t * fit.family->dx;
    const Rational y = fit.family->y0 + t * fit.family->dy;
    for (const auto& [a, b, c] : rows) CHECK(a * x + b * y == c);
  }
}

TEST_CASE("two-unknown solver: empty coefficients") {
  std::vector<std::array<Rational, 3>> consistent = {{0, 0, 0}, {0, 0, 0}};
  CHECK(solve_two_unknowns(consistent).status == Fit2::Status::Underdetermined);
  std::vector<std::array<Rational, 3>> inconsistent = {{0, 0, 0}, {0, 0, 1}};
  const Fit2 fit = solve_two_unknowns(inconsistent);
  REQUIRE(fit.status == Fit2::Status::Inconsistent);
  CHECK(fit.witness_row == 1);
}
