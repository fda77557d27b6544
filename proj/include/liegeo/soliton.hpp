#ifndef LIEGEO_SOLITON_HPP
#define LIEGEO_SOLITON_HPP

#include <optional>
#include <utility>

#include "liegeo/contact.hpp"

namespace liegeo {

// The soliton equation solved here, on all frame pairs (X,Y):
//   (L_V g)(X,Y) + 2 S(X,Y) + [2λ - (p + 2/dim)] g(X,Y) + 2μ eta(X)eta(Y) = 0
// with the conformal pressure p a given constant, never an unknown.

struct SolitonProblem {
  FrameVector potential;  // V
  Rational pressure;      // p
};

enum class SolitonStatus { ExactSoliton, Inconsistent, Underdetermined };
enum class SolitonClass { Shrinking, Steady, Expanding };  // sign of lambda

struct SolitonSolution {
  SolitonStatus status = SolitonStatus::Underdetermined;
  Rational lambda, mu;    // unique solution, or a representative when Underdetermined
  CoTensor2 residual;     // equation defect at (lambda, mu); zero iff ExactSoliton
  std::optional<SolitonClass> classification;       // set when ExactSoliton
  std::optional<AffineLine> family;                 // set when Underdetermined
  std::optional<std::pair<int, int>> witness;       // first failing frame pair (0-based)
};

CoTensor2 soliton_residual(const LieFrameManifold& m, const CoTensor2& ricci,
                           const AlmostContactStructure& acs, const SolitonProblem& prob,
                           const Rational& lambda, const Rational& mu);

// Stacks the equation over all frame pairs and solves the exact 2-unknown
// linear system in (lambda, mu).
SolitonSolution solve_soliton(const LieFrameManifold& m, const CoTensor2& ricci,
                              const AlmostContactStructure& acs, const SolitonProblem& prob);

enum class ConstraintCheck { Pass, Fail, NotApplicable };

// lambda + mu = 2n + p/2 + 1/(2n+1). Applies only to an ExactSoliton on a
// verified Kenmotsu structure; otherwise NotApplicable. A Fail on a verified
// instance contradicts the trace identity and is surfaced as such by callers.
ConstraintCheck check_sum_constraint(const SolitonSolution& sol, const LieFrameManifold& m,
                                     const SolitonProblem& prob, bool kenmotsu_verified);

// Lie-derivative identity battery for an ExactSoliton on a verified Kenmotsu
// structure. Every identity is evaluated exactly via tensor_calculus; the
// scalar-curvature items use the homogeneous specialization (all directional
// derivatives of r vanish).
ValidationReport soliton_lemma_suite(const LieFrameManifold& m,
                                     const ConnectionCoefficients& gamma,
                                     const CurvatureTensor& riemann,
                                     const CoTensor2& ricci,
                                     const AlmostContactStructure& acs,
                                     const SolitonProblem& prob,
                                     const SolitonSolution& sol);

struct GradientReport {
  Hessian hessian;             // symmetric by precondition
  SolitonSolution solution;    // from Hess f + S + [λ - (p/2 + 1/dim)] g + μ eta⊗eta = 0
  ValidationReport identities; // potential covariant rule, curvature identities
  bool collinear = false;      // Df = eta(Df) xi
};

// Throws AsymmetricHessian when grad is not a gradient candidate.
GradientReport gradient_soliton_check(const LieFrameManifold& m,
                                      const ConnectionCoefficients& gamma,
                                      const CurvatureTensor& riemann,
                                      const CoTensor2& ricci,
                                      const AlmostContactStructure& acs,
                                      const FrameVector& grad, const Rational& pressure);

}  // namespace liegeo

#endif
