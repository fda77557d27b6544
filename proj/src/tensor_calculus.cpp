#include "liegeo/tensor_calculus.hpp"

#include "liegeo/errors.hpp"

namespace liegeo {

FrameVector lie_bracket(const LieFrameManifold& m, const FrameVector& x,
                        const FrameVector& y) {
  const int n = m.dim;
  if (x.dim() != n || y.dim() != n) throw DimensionMismatch("lie_bracket: shape mismatch");
  FrameVector out(n);
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const Rational f = x[i] * y[j];
      for (int k = 0; k < n; ++k) out[k] += f * m.brackets(i, j, k);
    }
  }
  return out;
}

FrameVector covariant_derivative_vector(const ConnectionCoefficients& gamma,
                                        const FrameVector& x, const FrameVector& w) {
  const int n = gamma.dim();
  if (x.dim() != n || w.dim() != n)
    throw DimensionMismatch("covariant_derivative_vector: shape mismatch");
  FrameVector out(n);
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (w[j] == 0) continue;
      const Rational f = x[i] * w[j];
      for (int l = 0; l < n; ++l) out[l] += f * gamma(i, j, l);
    }
  }
  return out;
}

CoTensor2 lie_derivative_cotensor2(const LieFrameManifold& m, const FrameVector& v,
                                   const CoTensor2& t) {
  const int n = m.dim;
  if (v.dim() != n || t.rows() != n || t.cols() != n)
    throw DimensionMismatch("lie_derivative_cotensor2: shape mismatch");
  std::vector<FrameVector> drift(static_cast<size_t>(n));  // [V, e_i]
  for (int i = 0; i < n; ++i) drift[static_cast<size_t>(i)] = lie_bracket(m, v, Vector::basis(n, i));
  CoTensor2 out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational s = 0;
      for (int k = 0; k < n; ++k)
        s -= drift[static_cast<size_t>(i)][k] * t(k, j) + t(i, k) * drift[static_cast<size_t>(j)][k];
      out(i, j) = s;
    }
  return out;
}

CoTensor2 lie_derivative_metric_via_connection(const LieFrameManifold& m,
                                               const ConnectionCoefficients& gamma,
                                               const FrameVector& v) {
  const int n = m.dim;
  CoTensor2 out(n, n);
  std::vector<FrameVector> dv(static_cast<size_t>(n));  // nabla_{e_i} V
  for (int i = 0; i < n; ++i)
    dv[static_cast<size_t>(i)] = covariant_derivative_vector(gamma, Vector::basis(n, i), v);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out(i, j) = metric_inner(m, dv[static_cast<size_t>(i)], Vector::basis(n, j)) +
                  metric_inner(m, Vector::basis(n, i), dv[static_cast<size_t>(j)]);
  return out;
}

Tensor12 lie_derivative_connection(const LieFrameManifold& m,
                                   const ConnectionCoefficients& gamma,
                                   const CurvatureTensor& riemann,
                                   const FrameVector& v) {
  const int n = m.dim;
  if (v.dim() != n) throw DimensionMismatch("lie_derivative_connection: shape mismatch");
  std::vector<FrameVector> dv(static_cast<size_t>(n));  // nabla_{e_j} V
  for (int j = 0; j < n; ++j)
    dv[static_cast<size_t>(j)] = covariant_derivative_vector(gamma, Vector::basis(n, j), v);

  Tensor12 out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // nabla_i nabla_j V
      FrameVector term = covariant_derivative_vector(gamma, Vector::basis(n, i),
                                                     dv[static_cast<size_t>(j)]);
      // - nabla_{nabla_i e_j} V
      for (int mm = 0; mm < n; ++mm) {
        if (gamma(i, j, mm) == 0) continue;
        for (int l = 0; l < n; ++l)
          term[l] -= gamma(i, j, mm) * dv[static_cast<size_t>(mm)][l];
      }
      // + R(V, e_i) e_j
      for (int a = 0; a < n; ++a) {
        if (v[a] == 0) continue;
        for (int l = 0; l < n; ++l) term[l] += v[a] * riemann(a, i, j, l);
      }
      for (int l = 0; l < n; ++l) out(i, j, l) = term[l];
    }
  return out;
}

Tensor12 covariant_derivative_tensor12_along(const ConnectionCoefficients& gamma,
                                             const Tensor12& b, int a) {
  const int n = gamma.dim();
  Tensor12 out(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      // nabla_a of the vector value B(e_j, e_k) ...
      FrameVector value(n);
      for (int l = 0; l < n; ++l) value[l] = b(j, k, l);
      FrameVector dval = covariant_derivative_vector(gamma, Vector::basis(n, a), value);
      // ... minus the two slot corrections
      for (int l = 0; l < n; ++l) {
        Rational s = dval[l];
        for (int mm = 0; mm < n; ++mm)
          s -= gamma(a, j, mm) * b(mm, k, l) + gamma(a, k, mm) * b(j, mm, l);
        out(j, k, l) = s;
      }
    }
  return out;
}

Tensor13 lie_derivative_curvature(const LieFrameManifold& m,
                                  const ConnectionCoefficients& gamma,
                                  const CurvatureTensor& riemann,
                                  const FrameVector& v) {
  const int n = m.dim;
  const Tensor12 lv_conn = lie_derivative_connection(m, gamma, riemann, v);
  std::vector<Tensor12> grad(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a)
    grad[static_cast<size_t>(a)] = covariant_derivative_tensor12_along(gamma, lv_conn, a);
  Tensor13 out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          out(i, j, k, l) = grad[static_cast<size_t>(i)](j, k, l) -
                            grad[static_cast<size_t>(j)](i, k, l);
  return out;
}

Tensor13 lie_derivative_curvature_direct(const LieFrameManifold& m,
                                         const CurvatureTensor& riemann,
                                         const FrameVector& v) {
  const int n = m.dim;
  std::vector<FrameVector> drift(static_cast<size_t>(n));  // [V, e_i]
  for (int i = 0; i < n; ++i) drift[static_cast<size_t>(i)] = lie_bracket(m, v, Vector::basis(n, i));

  // R with one non-basis slot, the other two fixed basis vectors.
  auto r_first = [&](const FrameVector& x, int j, int k, int l) {
    Rational s = 0;
    for (int a = 0; a < n; ++a)
      if (x[a] != 0) s += x[a] * riemann(a, j, k, l);
    return s;
  };
  auto r_second = [&](int i, const FrameVector& y, int k, int l) {
    Rational s = 0;
    for (int a = 0; a < n; ++a)
      if (y[a] != 0) s += y[a] * riemann(i, a, k, l);
    return s;
  };
  auto r_third = [&](int i, int j, const FrameVector& z, int l) {
    Rational s = 0;
    for (int a = 0; a < n; ++a)
      if (z[a] != 0) s += z[a] * riemann(i, j, a, l);
    return s;
  };

  Tensor13 out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        FrameVector rv(n);
        for (int l = 0; l < n; ++l) rv[l] = riemann(i, j, k, l);
        const FrameVector lead = lie_bracket(m, v, rv);  // [V, R(e_i,e_j)e_k]
        for (int l = 0; l < n; ++l)
          out(i, j, k, l) = lead[l] - r_first(drift[static_cast<size_t>(i)], j, k, l) -
                            r_second(i, drift[static_cast<size_t>(j)], k, l) -
                            r_third(i, j, drift[static_cast<size_t>(k)], l);
      }
  return out;
}

Tensor3 covariant_derivative_cotensor2(const ConnectionCoefficients& gamma,
                                       const CoTensor2& t) {
  const int n = gamma.dim();
  if (t.rows() != n || t.cols() != n)
    throw DimensionMismatch("covariant_derivative_cotensor2: shape mismatch");
  Tensor3 out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational s = 0;  // the scalar T(e_j,e_k) is constant, so no leading term
        for (int mm = 0; mm < n; ++mm)
          s -= gamma(i, j, mm) * t(mm, k) + gamma(i, k, mm) * t(j, mm);
        out(i, j, k) = s;
      }
  return out;
}

Tensor4 covariant_derivative_cotensor4_along(const ConnectionCoefficients& gamma,
                                             const Tensor4& t, int a) {
  const int n = gamma.dim();
  Tensor4 out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational s = 0;
          for (int mm = 0; mm < n; ++mm)
            s -= gamma(a, i, mm) * t(mm, j, k, l) + gamma(a, j, mm) * t(i, mm, k, l) +
                 gamma(a, k, mm) * t(i, j, mm, l) + gamma(a, l, mm) * t(i, j, k, mm);
          out(i, j, k, l) = s;
        }
  return out;
}

Tensor3 covariant_derivative_endomorphism(const ConnectionCoefficients& gamma,
                                          const Endomorphism& a) {
  const int n = gamma.dim();
  if (a.rows() != n || a.cols() != n)
    throw DimensionMismatch("covariant_derivative_endomorphism: shape mismatch");
  Tensor3 out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // (nabla_i A)(e_j) = nabla_i (A e_j) - A(nabla_i e_j)
      FrameVector value(n);
      for (int l = 0; l < n; ++l) value[l] = a(l, j);
      FrameVector dval = covariant_derivative_vector(gamma, Vector::basis(n, i), value);
      for (int l = 0; l < n; ++l) {
        Rational s = dval[l];
        for (int mm = 0; mm < n; ++mm) s -= gamma(i, j, mm) * a(l, mm);
        out(i, j, l) = s;
      }
    }
  return out;
}

Hessian hessian(const LieFrameManifold& m, const ConnectionCoefficients& gamma,
                const FrameVector& grad) {
  const int n = m.dim;
  if (grad.dim() != n) throw DimensionMismatch("hessian: shape mismatch");
  CoTensor2 h(n, n);
  for (int i = 0; i < n; ++i) {
    const FrameVector d = covariant_derivative_vector(gamma, Vector::basis(n, i), grad);
    for (int j = 0; j < n; ++j) h(i, j) = metric_inner(m, d, Vector::basis(n, j));
  }
  return Hessian{h, h.is_symmetric()};
}

}  // namespace liegeo
