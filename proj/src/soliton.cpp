#include "liegeo/soliton.hpp"

#include "liegeo/errors.hpp"

namespace liegeo {

namespace {

// 2λ - (p + 2/dim), the metric coefficient of the soliton equation.
Rational metric_coefficient(int dim, const Rational& pressure, const Rational& lambda) {
  return 2 * lambda - (pressure + Rational(2, dim));
}

SolitonClass classify(const Rational& lambda) {
  if (lambda > 0) return SolitonClass::Shrinking;
  if (lambda == 0) return SolitonClass::Steady;
  return SolitonClass::Expanding;
}

}  // namespace

CoTensor2 soliton_residual(const LieFrameManifold& m, const CoTensor2& ricci,
                           const AlmostContactStructure& acs, const SolitonProblem& prob,
                           const Rational& lambda, const Rational& mu) {
  const CoTensor2 lie_g = lie_derivative_cotensor2(m, prob.potential, m.metric);
  return lie_g + 2 * ricci + metric_coefficient(m.dim, prob.pressure, lambda) * m.metric +
         2 * mu * outer(acs.eta, acs.eta);
}

SolitonSolution solve_soliton(const LieFrameManifold& m, const CoTensor2& ricci,
                              const AlmostContactStructure& acs, const SolitonProblem& prob) {
  const int n = m.dim;
  const CoTensor2 lie_g = lie_derivative_cotensor2(m, prob.potential, m.metric);

  // 2 g(i,j) λ + 2 eta_i eta_j μ = (p + 2/dim) g(i,j) - (L_V g)(i,j) - 2 S(i,j)
  std::vector<std::array<Rational, 3>> rows;
  rows.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rows.push_back({2 * m.metric(i, j), 2 * acs.eta[i] * acs.eta[j],
                      (prob.pressure + Rational(2, n)) * m.metric(i, j) - lie_g(i, j) -
                          2 * ricci(i, j)});
  const Fit2 fit = solve_two_unknowns(rows);

  SolitonSolution sol;
  sol.lambda = fit.x;
  sol.mu = fit.y;
  switch (fit.status) {
    case Fit2::Status::Unique:
      sol.status = SolitonStatus::ExactSoliton;
      sol.classification = classify(sol.lambda);
      break;
    case Fit2::Status::Underdetermined:
      sol.status = SolitonStatus::Underdetermined;
      sol.family = fit.family;
      break;
    case Fit2::Status::Inconsistent:
      sol.status = SolitonStatus::Inconsistent;
      sol.witness = std::pair<int, int>{fit.witness_row / n, fit.witness_row % n};
      break;
  }
  sol.residual = soliton_residual(m, ricci, acs, prob, sol.lambda, sol.mu);
  return sol;
}

ConstraintCheck check_sum_constraint(const SolitonSolution& sol, const LieFrameManifold& m,
                                     const SolitonProblem& prob, bool kenmotsu_verified) {
  if (!kenmotsu_verified || sol.status != SolitonStatus::ExactSoliton)
    return ConstraintCheck::NotApplicable;
  const Rational expected = Rational(m.dim - 1) + prob.pressure / 2 + Rational(1, m.dim);
  return sol.lambda + sol.mu == expected ? ConstraintCheck::Pass : ConstraintCheck::Fail;
}

ValidationReport soliton_lemma_suite(const LieFrameManifold& m,
                                     const ConnectionCoefficients& gamma,
                                     const CurvatureTensor& riemann,
                                     const CoTensor2& ricci,
                                     const AlmostContactStructure& acs,
                                     const SolitonProblem& prob,
                                     const SolitonSolution& sol) {
  const int n = m.dim;
  const Rational two_n = contact_rank(m) * 2;
  const Vector& xi = acs.xi;
  const Vector& eta = acs.eta;
  const FrameVector& v = prob.potential;
  const Rational& p = prob.pressure;
  const Rational& lambda = sol.lambda;
  const Rational& mu = sol.mu;
  ValidationReport report("soliton_lemmas");

  const Endomorphism q = ricci_operator(m, ricci);
  const Tensor3 dq = covariant_derivative_endomorphism(gamma, q);
  const Tensor12 lv_conn = lie_derivative_connection(m, gamma, riemann, v);
  const Tensor13 lv_riem = lie_derivative_curvature(m, gamma, riemann, v);
  const CoTensor2 lie_g = lie_derivative_cotensor2(m, v, m.metric);
  const CoTensor2 lie_ricci = lie_derivative_cotensor2(m, v, ricci);
  const FrameVector reeb_drift = lie_bracket(m, v, xi);

  // (L_V nabla)(X, xi) = 2QX + 4nX
  bool ok = true;
  std::string witness;
  for (int i = 0; i < n && ok; ++i)
    for (int l = 0; l < n && ok; ++l) {
      Rational lhs = 0;
      for (int j = 0; j < n; ++j) lhs += xi[j] * lv_conn(i, j, l);
      const Rational rhs = 2 * q(l, i) + 2 * two_n * Rational(i == l ? 1 : 0);
      if (lhs != rhs) {
        ok = false;
        witness = witness_string({i, l}, lhs, rhs);
      }
    }
  report.add("lie_connection_reeb_slot", ok, witness);

  // (L_V R)(X,Y)xi = 2[(nabla_X Q)Y - (nabla_Y Q)X + eta(X)QY - eta(Y)QX]
  //                  + 4n[eta(X)Y - eta(Y)X]
  ok = true;
  witness.clear();
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j)
      for (int l = 0; l < n && ok; ++l) {
        Rational lhs = 0;
        for (int k = 0; k < n; ++k) lhs += xi[k] * lv_riem(i, j, k, l);
        const Rational rhs =
            2 * (dq(i, j, l) - dq(j, i, l) + eta[i] * q(l, j) - eta[j] * q(l, i)) +
            2 * two_n *
                (eta[i] * Rational(j == l ? 1 : 0) - eta[j] * Rational(i == l ? 1 : 0));
        if (lhs != rhs) {
          ok = false;
          witness = witness_string({i, j, l}, lhs, rhs);
        }
      }
  report.add("lie_curvature_reeb_pair", ok, witness);

  // (L_V R)(X, xi)xi = 0
  ok = true;
  witness.clear();
  for (int i = 0; i < n && ok; ++i)
    for (int l = 0; l < n && ok; ++l) {
      Rational lhs = 0;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) lhs += xi[j] * xi[k] * lv_riem(i, j, k, l);
      if (lhs != 0) {
        ok = false;
        witness = witness_string({i, l}, lhs, Rational(0));
      }
    }
  report.add("lie_curvature_reeb_reeb", ok, witness);

  // (L_V g)(X, xi) = [4n - 2λ - 2μ + (p + 2/dim)] eta(X)
  const Rational reeb_coef = 2 * two_n - 2 * lambda - 2 * mu + p + Rational(2, n);
  ok = true;
  witness.clear();
  for (int i = 0; i < n && ok; ++i) {
    Rational lhs = 0;
    for (int j = 0; j < n; ++j) lhs += lie_g(i, j) * xi[j];
    const Rational rhs = reeb_coef * eta[i];
    if (lhs != rhs) {
      ok = false;
      witness = witness_string({i}, lhs, rhs);
    }
  }
  report.add("lie_metric_reeb_coefficient", ok, witness);

  // eta(L_V xi) = λ + μ - 2n - (p/2 + 1/dim)
  Rational drift_eta = 0;
  for (int i = 0; i < n; ++i) drift_eta += eta[i] * reeb_drift[i];
  const Rational drift_expect = lambda + mu - two_n - (p / 2 + Rational(1, n));
  report.add("reeb_drift_eta_value", drift_eta == drift_expect,
             "lhs=" + to_string(drift_eta) + " rhs=" + to_string(drift_expect));

  // (L_V S)(xi, xi) = 0
  Rational lvs_xx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) lvs_xx += xi[i] * xi[j] * lie_ricci(i, j);
  report.add("lie_ricci_reeb_reeb", lvs_xx == 0, "lhs=" + to_string(lvs_xx) + " rhs=0");

  // (L_V S)(Y, xi) = 0 (homogeneous data: all derivatives of r vanish)
  ok = true;
  witness.clear();
  for (int i = 0; i < n && ok; ++i) {
    Rational lhs = 0;
    for (int j = 0; j < n; ++j) lhs += lie_ricci(i, j) * xi[j];
    if (lhs != 0) {
      ok = false;
      witness = witness_string({i}, lhs, Rational(0));
    }
  }
  report.add("lie_ricci_reeb_slot", ok, witness);

  // (L_V g)(X, xi) = 0
  ok = true;
  witness.clear();
  for (int i = 0; i < n && ok; ++i) {
    Rational lhs = 0;
    for (int j = 0; j < n; ++j) lhs += lie_g(i, j) * xi[j];
    if (lhs != 0) {
      ok = false;
      witness = witness_string({i}, lhs, Rational(0));
    }
  }
  report.add("lie_metric_reeb_vanishes", ok, witness);

  // (2n + 1 + r/2n) L_V xi = 0
  const Rational r = scalar_curvature(m, ricci);
  const Rational factor = two_n + 1 + r / two_n;
  const FrameVector scaled = factor * reeb_drift;
  report.add("einstein_factor_reeb_drift", scaled.is_zero(),
             "factor=" + to_string(factor));

  // homogeneous specialization of the scalar-curvature identity
  report.add("scalar_curvature_einstein_value", r == -two_n * (two_n + 1),
             "r=" + to_string(r));
  return report;
}

GradientReport gradient_soliton_check(const LieFrameManifold& m,
                                      const ConnectionCoefficients& gamma,
                                      const CurvatureTensor& riemann,
                                      const CoTensor2& ricci,
                                      const AlmostContactStructure& acs,
                                      const FrameVector& grad, const Rational& pressure) {
  const int n = m.dim;
  GradientReport out;
  out.hessian = hessian(m, gamma, grad);
  if (!out.hessian.symmetric)
    throw AsymmetricHessian("potential vector is not a gradient candidate");

  // Hess f(i,j) + S(i,j) + [λ - (p/2 + 1/dim)] g(i,j) + μ eta_i eta_j = 0
  const CoTensor2& h = out.hessian.values;
  std::vector<std::array<Rational, 3>> rows;
  rows.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rows.push_back({m.metric(i, j), acs.eta[i] * acs.eta[j],
                      (pressure / 2 + Rational(1, n)) * m.metric(i, j) - h(i, j) -
                          ricci(i, j)});
  const Fit2 fit = solve_two_unknowns(rows);

  SolitonSolution& sol = out.solution;
  sol.lambda = fit.x;
  sol.mu = fit.y;
  switch (fit.status) {
    case Fit2::Status::Unique:
      sol.status = SolitonStatus::ExactSoliton;
      sol.classification = classify(sol.lambda);
      break;
    case Fit2::Status::Underdetermined:
      sol.status = SolitonStatus::Underdetermined;
      sol.family = fit.family;
      break;
    case Fit2::Status::Inconsistent:
      sol.status = SolitonStatus::Inconsistent;
      sol.witness = std::pair<int, int>{fit.witness_row / n, fit.witness_row % n};
      break;
  }
  sol.residual = h + ricci +
                 (sol.lambda - (pressure / 2 + Rational(1, n))) * m.metric +
                 sol.mu * outer(acs.eta, acs.eta);

  // collinearity Df = eta(Df) xi is meaningful regardless of solve status
  Rational eta_grad = 0;
  for (int i = 0; i < n; ++i) eta_grad += acs.eta[i] * grad[i];
  out.collinear = (grad == eta_grad * acs.xi);

  out.identities = ValidationReport("gradient");
  if (sol.status != SolitonStatus::ExactSoliton) return out;

  const Endomorphism q = ricci_operator(m, ricci);
  const Tensor3 dq = covariant_derivative_endomorphism(gamma, q);
  const Rational shifted = sol.lambda - (pressure / 2 + Rational(1, n));

  // nabla_X Df = -QX - [λ - (p/2 + 1/dim)]X - μ eta(X) xi
  bool ok = true;
  std::string witness;
  for (int i = 0; i < n && ok; ++i) {
    const FrameVector d = covariant_derivative_vector(gamma, Vector::basis(n, i), grad);
    for (int l = 0; l < n && ok; ++l) {
      const Rational rhs = -q(l, i) - shifted * Rational(i == l ? 1 : 0) -
                           sol.mu * acs.eta[i] * acs.xi[l];
      if (d[l] != rhs) {
        ok = false;
        witness = witness_string({i, l}, d[l], rhs);
      }
    }
  }
  out.identities.add("potential_covariant_rule", ok, witness);

  // R(X,Y)Df = [(nabla_Y Q)X - (nabla_X Q)Y] + μ[eta(X)Y - eta(Y)X]
  ok = true;
  witness.clear();
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j)
      for (int l = 0; l < n && ok; ++l) {
        Rational lhs = 0;
        for (int k = 0; k < n; ++k) lhs += grad[k] * riemann(i, j, k, l);
        const Rational rhs = dq(j, i, l) - dq(i, j, l) +
                             sol.mu * (acs.eta[i] * Rational(j == l ? 1 : 0) -
                                       acs.eta[j] * Rational(i == l ? 1 : 0));
        if (lhs != rhs) {
          ok = false;
          witness = witness_string({i, j, l}, lhs, rhs);
        }
      }
  out.identities.add("curvature_potential_identity", ok, witness);

  // g(R(X,Y)Df, xi) = 0
  ok = true;
  witness.clear();
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j) {
      Rational lhs = 0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) lhs += grad[k] * riemann(i, j, k, l) * acs.eta[l];
      if (lhs != 0) {
        ok = false;
        witness = witness_string({i, j}, lhs, Rational(0));
      }
    }
  out.identities.add("curvature_potential_reeb_orthogonal", ok, witness);

  out.identities.add("potential_collinear_reeb", out.collinear);
  return out;
}

}  // namespace liegeo
