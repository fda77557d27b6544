#ifndef LIEGEO_CONTACT_HPP
#define LIEGEO_CONTACT_HPP

#include "liegeo/frame.hpp"
#include "liegeo/tensor_calculus.hpp"

namespace liegeo {

struct AlmostContactStructure {
  Endomorphism phi;
  FrameVector xi;
  Vector eta;  // eta[i] = g(e_i, xi), always the metric dual of xi
};

// n with dim = 2n + 1; throws EvenDimension otherwise. Contact operations are
// restricted to odd-dimensional frames.
int contact_rank(const LieFrameManifold& m);

// eta is derived from (g, xi), never accepted independently.
AlmostContactStructure make_almost_contact(const LieFrameManifold& m,
                                           Endomorphism phi, FrameVector xi);

// Validates a caller-supplied eta against the metric dual; throws Error on
// mismatch.
AlmostContactStructure make_almost_contact(const LieFrameManifold& m,
                                           Endomorphism phi, FrameVector xi,
                                           Vector eta);

// eta(xi) = 1, phi(xi) = 0, eta∘phi = 0, phi^2 = -I + xi⊗eta,
// g(phi X, phi Y) = g(X,Y) - eta(X)eta(Y), eta = g(·, xi).
ValidationReport verify_almost_contact(const LieFrameManifold& m,
                                       const AlmostContactStructure& acs);

// Kenmotsu condition (nabla_X phi)Y = g(phi X, Y) xi - eta(Y) phi X together
// with the unit-Reeb consequence nabla_X xi = X - eta(X) xi, both checked on
// all frame pairs.
ValidationReport verify_kenmotsu(const LieFrameManifold& m,
                                 const ConnectionCoefficients& gamma,
                                 const AlmostContactStructure& acs);

// The derived-identity battery for verified Kenmotsu structures: covariant
// derivative of eta, the three curvature/Reeb contractions, the Ricci-Reeb
// contraction and the two Ricci-operator derivative rules.
ValidationReport kenmotsu_identity_suite(const LieFrameManifold& m,
                                         const ConnectionCoefficients& gamma,
                                         const CurvatureTensor& riemann,
                                         const CoTensor2& ricci,
                                         const AlmostContactStructure& acs);

struct EtaEinsteinFit {
  Rational alpha, beta;    // S = alpha g + beta eta⊗eta when is_eta_einstein
  bool is_eta_einstein = false;
  bool is_einstein = false;  // is_eta_einstein with beta = 0
};

// Exact linear fit of S against {g, eta⊗eta}. A rank-deficient system (only
// possible when g and eta⊗eta are linearly dependent) resolves to the
// Einstein representative beta = 0.
EtaEinsteinFit eta_einstein_fit(const LieFrameManifold& m, const CoTensor2& ricci,
                                const AlmostContactStructure& acs);

}  // namespace liegeo

#endif
