#ifndef LIEGEO_DEFORMATION_HPP
#define LIEGEO_DEFORMATION_HPP

#include "liegeo/soliton.hpp"

namespace liegeo {

// Structure change with constant positive parameters (a, b):
//   phi* = phi,  xi* = xi / a,  eta* = a eta,  g* = b g + (a^2 - b) eta⊗eta.
// a = b is the homothetic special case, a^2 = b the conformal one. Constancy
// keeps every derivative of a and b zero, so the closed forms below are exact.

struct DeformationParams {
  Rational a, b;  // both > 0, enforced by the operations
};

struct DeformedStructure {
  LieFrameManifold manifold;  // same frame and brackets, metric g*
  AlmostContactStructure acs;
};

DeformedStructure deform(const LieFrameManifold& m, const AlmostContactStructure& acs,
                         const DeformationParams& params);

// Closed form nabla*_X Y = nabla_X Y + ((a^2-b)/a^2) g(phi X, phi Y) xi.
// Must equal levi_civita_connection on the deformed metric, exactly.
ConnectionCoefficients deformed_connection_formula(const LieFrameManifold& m,
                                                   const ConnectionCoefficients& gamma,
                                                   const AlmostContactStructure& acs,
                                                   const DeformationParams& params);

// Closed form S*(X,Y) = S(X,Y) + (2n(a^2-b)/a^2)[g(X,Y) - eta(X)eta(Y)].
// Must equal the full curvature recomputation on the deformed metric.
CoTensor2 deformed_ricci_formula(const LieFrameManifold& m, const CoTensor2& ricci,
                                 const AlmostContactStructure& acs,
                                 const DeformationParams& params);

struct InvarianceReport {
  CoTensor2 defect;            // soliton equation of (g*, eta*) at the base (lambda, mu)
  bool invariant = false;      // defect == 0
  CoTensor2 closed_form;       // constant-parameter closed form of the defect:
                               // 2(1-b)S + (4n(a^2-b)/a^2) g
                               //        + (4n(a^2-b)(a^2-1)/a^2) eta⊗eta
  bool matches_closed_form = false;
  EtaEinsteinFit base_fit;     // fit of S on the base structure
  EtaEinsteinFit deformed_fit; // fit of S* on the deformed structure
};

// Evaluates the deformed soliton equation at the base solution (Ricci tensor
// recomputed from scratch on the deformed metric) and compares against the
// closed form; invariance is reported, never assumed.
InvarianceReport invariance_check(const LieFrameManifold& m, const CoTensor2& ricci,
                                  const AlmostContactStructure& acs,
                                  const SolitonProblem& prob, const SolitonSolution& sol,
                                  const DeformationParams& params);

}  // namespace liegeo

#endif
