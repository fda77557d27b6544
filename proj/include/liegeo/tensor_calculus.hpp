#ifndef LIEGEO_TENSOR_CALCULUS_HPP
#define LIEGEO_TENSOR_CALCULUS_HPP

#include "liegeo/frame.hpp"

namespace liegeo {

// Vector-valued bilinear tensor B(i,j,k): B(e_i, e_j) = sum_k B(i,j,k) e_k.
using Tensor12 = Tensor3;
// Curvature-shaped object D(i,j,k,l): D(e_i,e_j)e_k = sum_l D(i,j,k,l) e_l.
using Tensor13 = Tensor4;

// [X, Y] by bilinear extension of the structure constants.
FrameVector lie_bracket(const LieFrameManifold& m, const FrameVector& x,
                        const FrameVector& y);

// nabla_X W for constant-coefficient fields.
FrameVector covariant_derivative_vector(const ConnectionCoefficients& gamma,
                                        const FrameVector& x, const FrameVector& w);

// (L_V T)(X,Y) = -T([V,X],Y) - T(X,[V,Y]); the scalar term V(T(X,Y)) vanishes
// on constant components.
CoTensor2 lie_derivative_cotensor2(const LieFrameManifold& m, const FrameVector& v,
                                   const CoTensor2& t);

// Alternate route for the metric only: (L_V g)(X,Y) = g(nabla_X V, Y)
// + g(X, nabla_Y V). Equals the bracket route; kept as an independent check.
CoTensor2 lie_derivative_metric_via_connection(const LieFrameManifold& m,
                                               const ConnectionCoefficients& gamma,
                                               const FrameVector& v);

// (L_V nabla)(X,Y) = nabla_X nabla_Y V - nabla_{nabla_X Y} V + R(V,X)Y.
// Symmetric in (X,Y) for every V; asserted by tests, not by construction.
Tensor12 lie_derivative_connection(const LieFrameManifold& m,
                                   const ConnectionCoefficients& gamma,
                                   const CurvatureTensor& riemann,
                                   const FrameVector& v);

// (L_V R)(X,Y)Z = (nabla_X L_V nabla)(Y,Z) - (nabla_Y L_V nabla)(X,Z).
Tensor13 lie_derivative_curvature(const LieFrameManifold& m,
                                  const ConnectionCoefficients& gamma,
                                  const CurvatureTensor& riemann,
                                  const FrameVector& v);

// Direct route from the Lie-derivative definition, term by term:
// [V, R(X,Y)Z] - R([V,X],Y)Z - R(X,[V,Y])Z - R(X,Y)[V,Z].
// Independent of lie_derivative_connection; the two must agree exactly.
Tensor13 lie_derivative_curvature_direct(const LieFrameManifold& m,
                                         const CurvatureTensor& riemann,
                                         const FrameVector& v);

// (nabla T) for a (0,2) tensor: result(i,j,k) = (nabla_{e_i} T)(e_j, e_k).
Tensor3 covariant_derivative_cotensor2(const ConnectionCoefficients& gamma,
                                       const CoTensor2& t);

// (nabla_{e_a} B) for a vector-valued bilinear tensor; the value vector is a
// genuine vector field, so its own covariant derivative contributes.
Tensor12 covariant_derivative_tensor12_along(const ConnectionCoefficients& gamma,
                                             const Tensor12& b, int a);

// (nabla_{e_a} T) for a (0,4) tensor, e.g. the lowered curvature.
Tensor4 covariant_derivative_cotensor4_along(const ConnectionCoefficients& gamma,
                                             const Tensor4& t, int a);

// (nabla A) for an endomorphism: result(i,j,l) = l-component of
// (nabla_{e_i} A)(e_j).
Tensor3 covariant_derivative_endomorphism(const ConnectionCoefficients& gamma,
                                          const Endomorphism& a);

struct Hessian {
  CoTensor2 values;  // Hess f(X,Y) = g(nabla_X Df, Y)
  bool symmetric;    // false means Df is not a gradient candidate
};

Hessian hessian(const LieFrameManifold& m, const ConnectionCoefficients& gamma,
                const FrameVector& grad);

}  // namespace liegeo

#endif
