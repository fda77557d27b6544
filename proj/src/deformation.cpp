#include "liegeo/deformation.hpp"

#include "liegeo/errors.hpp"

namespace liegeo {

namespace {

void require_positive(const DeformationParams& params) {
  if (!(params.a > 0) || !(params.b > 0))
    throw NonPositiveParameter("deformation parameters must be positive");
}

}  // namespace

DeformedStructure deform(const LieFrameManifold& m, const AlmostContactStructure& acs,
                         const DeformationParams& params) {
  require_positive(params);
  const Rational& a = params.a;
  const Rational& b = params.b;
  const Matrix deformed_metric =
      b * m.metric + (a * a - b) * outer(acs.eta, acs.eta);
  LieFrameManifold deformed(m.dim, m.brackets, deformed_metric);
  // eta* = a eta arises automatically as the metric dual of xi/a under g*.
  AlmostContactStructure deformed_acs =
      make_almost_contact(deformed, acs.phi, Rational(1) / a * acs.xi);
  return DeformedStructure{std::move(deformed), std::move(deformed_acs)};
}

ConnectionCoefficients deformed_connection_formula(const LieFrameManifold& m,
                                                   const ConnectionCoefficients& gamma,
                                                   const AlmostContactStructure& acs,
                                                   const DeformationParams& params) {
  require_positive(params);
  const int n = m.dim;
  const Rational coef = (params.a * params.a - params.b) / (params.a * params.a);
  const Matrix phi_metric = acs.phi.transposed() * m.metric * acs.phi;  // g(phi X, phi Y)
  ConnectionCoefficients out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        out(i, j, l) = gamma(i, j, l) + coef * phi_metric(i, j) * acs.xi[l];
  return out;
}

CoTensor2 deformed_ricci_formula(const LieFrameManifold& m, const CoTensor2& ricci,
                                 const AlmostContactStructure& acs,
                                 const DeformationParams& params) {
  require_positive(params);
  const Rational two_n = contact_rank(m) * 2;
  const Rational coef = two_n * (params.a * params.a - params.b) / (params.a * params.a);
  return ricci + coef * (m.metric - outer(acs.eta, acs.eta));
}

InvarianceReport invariance_check(const LieFrameManifold& m, const CoTensor2& ricci,
                                  const AlmostContactStructure& acs,
                                  const SolitonProblem& prob, const SolitonSolution& sol,
                                  const DeformationParams& params) {
  const int n = m.dim;
  const Rational two_n = contact_rank(m) * 2;
  const Rational& a = params.a;
  const Rational& b = params.b;

  const DeformedStructure def = deform(m, acs, params);
  const Geometry deformed_geo = compute_geometry(def.manifold);

  InvarianceReport out;
  // (L_V g*) + 2 S* + [2λ - (p + 2/dim)] g* + 2μ eta*⊗eta* at the base solution
  const CoTensor2 lie_g = lie_derivative_cotensor2(def.manifold, prob.potential,
                                                   def.manifold.metric);
  out.defect = lie_g + 2 * deformed_geo.ricci +
               (2 * sol.lambda - (prob.pressure + Rational(2, n))) * def.manifold.metric +
               2 * sol.mu * outer(def.acs.eta, def.acs.eta);
  out.invariant = out.defect.is_zero();

  // Constant-parameter closed form of the same defect, on the base tensors.
  const Rational shift = a * a - b;
  out.closed_form = 2 * (1 - b) * ricci +
                    (2 * two_n * shift / (a * a)) * m.metric +
                    (2 * two_n * shift * (a * a - 1) / (a * a)) * outer(acs.eta, acs.eta);
  out.matches_closed_form = (out.defect == out.closed_form);

  out.base_fit = eta_einstein_fit(m, ricci, acs);
  out.deformed_fit = eta_einstein_fit(def.manifold, deformed_geo.ricci, def.acs);
  return out;
}

}  // namespace liegeo
