#ifndef LIEGEO_IDENTITIES_HPP
#define LIEGEO_IDENTITIES_HPP

#include "liegeo/frame.hpp"

namespace liegeo {

// Structural identity battery for a computed geometry: torsion-freeness,
// metric compatibility, curvature antisymmetries, pair symmetry of the
// lowered tensor, both Bianchi identities, Ricci symmetry. Every check is
// exact and universally quantified over frame indices.
ValidationReport frame_identity_suite(const LieFrameManifold& m, const Geometry& geo);

}  // namespace liegeo

#endif
