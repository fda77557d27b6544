#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liegeo/deformation.hpp"
#include "support/models.hpp"

using namespace liegeo;
using liegeo::testing::frac;
using liegeo::testing::load_model;

namespace {

const std::vector<DeformationParams>& parameter_pairs() {
  static const std::vector<DeformationParams> pairs = {
      {1, 1}, {2, 2}, {2, 4}, {3, 9}, {2, 3}};
  return pairs;
}

}  // namespace

TEST_CASE("identity parameters are a fixed point") {
  const auto k5 = load_model("kenmotsu5");
  const DeformedStructure def = deform(k5.m, k5.acs, {1, 1});
  CHECK(def.manifold.metric == k5.m.metric);
  CHECK(def.acs.xi == k5.acs.xi);
  CHECK(def.acs.eta == k5.acs.eta);
  CHECK(def.acs.phi == k5.acs.phi);
  CHECK(deformed_connection_formula(k5.m, k5.geo.connection, k5.acs, {1, 1}) ==
        k5.geo.connection);
  CHECK(deformed_ricci_formula(k5.m, k5.geo.ricci, k5.acs, {1, 1}) == k5.geo.ricci);
}

TEST_CASE("a = b = 2 on kenmotsu5: metric, Reeb and eta scale as stated") {
  const auto k5 = load_model("kenmotsu5");
  const DeformedStructure def = deform(k5.m, k5.acs, {2, 2});
  Matrix expect = Rational(2) * Matrix::identity(5);
  expect(4, 4) = 4;
  CHECK(def.manifold.metric == expect);
  CHECK(def.acs.xi == frac(1, 2) * k5.acs.xi);
  CHECK(def.acs.eta == Rational(2) * k5.acs.eta);
  CHECK(verify_almost_contact(def.manifold, def.acs).all_passed());
}

TEST_CASE("conformal case a^2 = b collapses to a constant rescaling") {
  const auto k5 = load_model("kenmotsu5");
  const DeformedStructure def = deform(k5.m, k5.acs, {2, 4});
  CHECK(def.manifold.metric == Rational(4) * k5.m.metric);
  CHECK(deformed_connection_formula(k5.m, k5.geo.connection, k5.acs, {2, 4}) ==
        k5.geo.connection);
  CHECK(deformed_ricci_formula(k5.m, k5.geo.ricci, k5.acs, {2, 4}) == k5.geo.ricci);
  // recomputation agrees: constant conformal scaling preserves both
  const Geometry geo = compute_geometry(def.manifold);
  CHECK(geo.connection == k5.geo.connection);
  CHECK(geo.ricci == k5.geo.ricci);
}

TEST_CASE("nonpositive parameters are rejected") {
  const auto k5 = load_model("kenmotsu5");
  CHECK_THROWS_AS(deform(k5.m, k5.acs, {0, 1}), NonPositiveParameter);
  CHECK_THROWS_AS(deform(k5.m, k5.acs, {1, Rational(-2)}), NonPositiveParameter);
  CHECK_THROWS_AS(deformed_ricci_formula(k5.m, k5.geo.ricci, k5.acs, {Rational(-1), 1}),
                  NonPositiveParameter);
}

TEST_CASE("closed forms equal full recomputation on both catalog models") {
  for (const char* name : {"kenmotsu5", "hyperbolic3"}) {
    const auto model = load_model(name);
    for (const auto& params : parameter_pairs()) {
      INFO(name, " a=", to_string(params.a), " b=", to_string(params.b));
      const DeformedStructure def = deform(model.m, model.acs, params);
      const Geometry recomputed = compute_geometry(def.manifold);
      CHECK(deformed_connection_formula(model.m, model.geo.connection, model.acs, params) ==
            recomputed.connection);
      CHECK(deformed_ricci_formula(model.m, model.geo.ricci, model.acs, params) ==
            recomputed.ricci);
      CHECK(verify_almost_contact(def.manifold, def.acs).all_passed());
    }
  }
}

TEST_CASE("hand-verified deformed values at a = b = 2 on kenmotsu5") {
  const auto k5 = load_model("kenmotsu5");
  const DeformedStructure def = deform(k5.m, k5.acs, {2, 2});
  const Geometry geo = compute_geometry(def.manifold);
  CHECK(geo.ricci(0, 0) == -2);
  CHECK(geo.ricci(4, 4) == -4);
  const ConnectionCoefficients conn =
      deformed_connection_formula(k5.m, k5.geo.connection, k5.acs, {2, 2});
  CHECK(conn(0, 0, 4) == frac(-1, 2));  // nabla*_{e1} e1 = -(b/a^2) e5
}

TEST_CASE("homothetic correction coefficient is 2n(a^2-a)/a^2") {
  const auto k5 = load_model("kenmotsu5");
  for (int a : {2, 3, 5}) {
    const DeformationParams params{a, a};
    const CoTensor2 s = deformed_ricci_formula(k5.m, k5.geo.ricci, k5.acs, params);
    const Rational coef = Rational(4) * (Rational(a) * a - a) / (Rational(a) * a);
    CHECK(s == k5.geo.ricci + coef * (k5.m.metric - outer(k5.acs.eta, k5.acs.eta)));
  }
}

TEST_CASE("composition law on the structure data") {
  const auto k5 = load_model("kenmotsu5");
  const DeformationParams first{2, 3}, second{frac(3, 2), frac(5, 2)};
  const DeformedStructure once = deform(k5.m, k5.acs, first);
  const DeformedStructure twice = deform(once.manifold, once.acs, second);
  const DeformedStructure combined =
      deform(k5.m, k5.acs, {first.a * second.a, first.b * second.b});
  CHECK(twice.manifold.metric == combined.manifold.metric);
  CHECK(twice.acs.xi == combined.acs.xi);
  CHECK(twice.acs.eta == combined.acs.eta);
  CHECK(twice.acs.phi == combined.acs.phi);
}

TEST_CASE("deformed structures with a != 1 fail the unit-Reeb rule, reported not asserted") {
  const auto k5 = load_model("kenmotsu5");
  const DeformedStructure def = deform(k5.m, k5.acs, {2, 2});
  const Geometry geo = compute_geometry(def.manifold);
  const ValidationReport report = verify_kenmotsu(def.manifold, geo.connection, def.acs);
  CHECK_FALSE(report.passed("reeb_covariant_rule"));

  const DeformedStructure same = deform(k5.m, k5.acs, {1, 1});
  const Geometry geo_same = compute_geometry(same.manifold);
  CHECK(verify_kenmotsu(same.manifold, geo_same.connection, same.acs).all_passed());
}

TEST_CASE("invariance defect equals the constant-parameter closed form") {
  for (const char* name : {"kenmotsu5", "hyperbolic3"}) {
    const auto model = load_model(name);
    for (const Rational& p : {Rational(0), Rational(2)}) {
      const SolitonProblem prob{model.acs.xi, p};
      const SolitonSolution sol = solve_soliton(model.m, model.geo.ricci, model.acs, prob);
      REQUIRE(sol.status == SolitonStatus::ExactSoliton);
      for (const auto& params : parameter_pairs()) {
        INFO(name, " p=", to_string(p), " a=", to_string(params.a), " b=",
             to_string(params.b));
        const InvarianceReport report =
            invariance_check(model.m, model.geo.ricci, model.acs, prob, sol, params);
        CHECK(report.matches_closed_form);
        // identity parameters leave the soliton equation satisfied
        if (params.a == 1 && params.b == 1) CHECK(report.invariant);
      }
    }
  }
}

TEST_CASE("closed form also holds for zero and scaled potentials") {
  const auto k5 = load_model("kenmotsu5");
  for (const Rational& t : {Rational(0), Rational(2), Rational(-1)}) {
    const SolitonProblem prob{t * k5.acs.xi, 0};
    const SolitonSolution sol = solve_soliton(k5.m, k5.geo.ricci, k5.acs, prob);
    REQUIRE(sol.status == SolitonStatus::ExactSoliton);
    for (const auto& params : parameter_pairs()) {
      const InvarianceReport report =
          invariance_check(k5.m, k5.geo.ricci, k5.acs, prob, sol, params);
      INFO("t=", to_string(t), " a=", to_string(params.a), " b=", to_string(params.b));
      CHECK(report.matches_closed_form);
    }
  }
}

TEST_CASE("invariance report: defect at a = b = 2 on kenmotsu5 is 12g + 12 eta x eta") {
  const auto k5 = load_model("kenmotsu5");
  const SolitonProblem prob{k5.acs.xi, 0};
  const SolitonSolution sol = solve_soliton(k5.m, k5.geo.ricci, k5.acs, prob);
  REQUIRE(sol.status == SolitonStatus::ExactSoliton);
  const InvarianceReport report = invariance_check(k5.m, k5.geo.ricci, k5.acs, prob, sol,
                                                   {2, 2});
  const CoTensor2 expect = Rational(12) * k5.m.metric +
                           Rational(12) * outer(k5.acs.eta, k5.acs.eta);
  CHECK(report.defect == expect);
  CHECK_FALSE(report.invariant);
  CHECK(report.matches_closed_form);
}

TEST_CASE("eta-Einstein fits across the deformation at a = b = 2") {
  const auto k5 = load_model("kenmotsu5");
  const SolitonProblem prob{k5.acs.xi, 0};
  const SolitonSolution sol = solve_soliton(k5.m, k5.geo.ricci, k5.acs, prob);
  const InvarianceReport report = invariance_check(k5.m, k5.geo.ricci, k5.acs, prob, sol,
                                                   {2, 2});
  REQUIRE(report.base_fit.is_eta_einstein);
  CHECK(report.base_fit.alpha == -4);
  CHECK(report.base_fit.beta == 0);
  REQUIRE(report.deformed_fit.is_eta_einstein);
  CHECK(report.deformed_fit.alpha == -1);
  CHECK(report.deformed_fit.beta == 0);
  CHECK(report.deformed_fit.is_einstein);
}
