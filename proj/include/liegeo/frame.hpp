#ifndef LIEGEO_FRAME_HPP
#define LIEGEO_FRAME_HPP

#include "liegeo/linalg.hpp"
#include "liegeo/report.hpp"
#include "liegeo/tensor.hpp"

namespace liegeo {

// Component conventions, used throughout:
//   brackets  c(i,j,k):  [e_i, e_j] = sum_k c(i,j,k) e_k
//   metric    g(i,j)  =  g(e_i, e_j), constant on the frame
//   Gamma(i,j,k):        nabla_{e_i} e_j = sum_k Gamma(i,j,k) e_k
//   riemann R(i,j,k,l):  R(e_i, e_j) e_k = sum_l R(i,j,k,l) e_l
//                        with R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z
//                                       - nabla_{[X,Y]} Z
// All tensor fields have constant frame components, so every derivative of a
// scalar component function vanishes and the calculus below is exact finite
// linear algebra.

using FrameVector = Vector;          // V = sum_i v[i] e_i, constant coefficients
using CoTensor2 = Matrix;            // T(i,j) = T(e_i, e_j)
using Endomorphism = Matrix;         // A(i,j): A(e_j) = sum_i A(i,j) e_i (column action)
using ConnectionCoefficients = Tensor3;
using CurvatureTensor = Tensor4;

struct LieFrameManifold {
  int dim = 0;
  Tensor3 brackets;
  Matrix metric;

  LieFrameManifold() = default;
  // Throws DimensionMismatch when the component arrays do not match dim.
  LieFrameManifold(int dim, Tensor3 brackets, Matrix metric);
};

// g(X, Y) for constant-coefficient fields.
Rational metric_inner(const LieFrameManifold& m, const Vector& x, const Vector& y);

// Reports bracket antisymmetry, the Jacobi identity, metric symmetry and
// exact positive definiteness. Failures carry index witnesses.
ValidationReport validate_frame(const LieFrameManifold& m);

// Koszul formula specialized to a constant frame metric; the linear system in
// g is solved exactly per (i,j) pair. Throws SingularMatrix on degenerate g.
ConnectionCoefficients levi_civita_connection(const LieFrameManifold& m);

CurvatureTensor curvature_tensor(const LieFrameManifold& m,
                                 const ConnectionCoefficients& gamma);

// S(j,k) = sum_i R(i,j,k,i): the basis-free trace over the first curvature
// slot, which reproduces the orthonormal-frame contraction.
CoTensor2 ricci_tensor(const LieFrameManifold& m, const CurvatureTensor& riemann);

// Q = g^{-1} S, column-action convention: g(Q e_j, e_k) = S(e_j, e_k).
Endomorphism ricci_operator(const LieFrameManifold& m, const CoTensor2& ricci);

Rational scalar_curvature(const LieFrameManifold& m, const CoTensor2& ricci);

// Convenience bundle for callers that need the whole chain.
struct Geometry {
  ConnectionCoefficients connection;
  CurvatureTensor riemann;
  CoTensor2 ricci;
  Endomorphism ricci_op;
  Rational scalar;
};

Geometry compute_geometry(const LieFrameManifold& m);

}  // namespace liegeo

#endif
