#include "liegeo/frame.hpp"

#include "liegeo/errors.hpp"

namespace liegeo {

LieFrameManifold::LieFrameManifold(int dim_in, Tensor3 brackets_in, Matrix metric_in)
    : dim(dim_in), brackets(std::move(brackets_in)), metric(std::move(metric_in)) {
  if (dim <= 0) throw DimensionMismatch("manifold dimension must be positive");
  if (brackets.dim() != dim) throw DimensionMismatch("structure constant array does not match dim");
  if (metric.rows() != dim || metric.cols() != dim)
    throw DimensionMismatch("metric does not match dim");
}

Rational metric_inner(const LieFrameManifold& m, const Vector& x, const Vector& y) {
  if (x.dim() != m.dim || y.dim() != m.dim) throw DimensionMismatch("metric_inner: shape mismatch");
  Rational out = 0;
  for (int i = 0; i < m.dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < m.dim; ++j) out += x[i] * m.metric(i, j) * y[j];
  }
  return out;
}

ValidationReport validate_frame(const LieFrameManifold& m) {
  ValidationReport report("frame");
  const int n = m.dim;
  const Tensor3& c = m.brackets;

  bool ok = true;
  std::string witness;
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j)
      for (int k = 0; k < n && ok; ++k)
        if (c(i, j, k) != -c(j, i, k)) {
          ok = false;
          witness = witness_string({i, j, k}, c(i, j, k), -c(j, i, k));
        }
  report.add("bracket_antisymmetry", ok, witness);

  ok = true;
  witness.clear();
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j)
      for (int k = 0; k < n && ok; ++k)
        for (int l = 0; l < n && ok; ++l) {
          Rational sum = 0;
          for (int mm = 0; mm < n; ++mm)
            sum += c(i, j, mm) * c(mm, k, l) + c(j, k, mm) * c(mm, i, l) +
                   c(k, i, mm) * c(mm, j, l);
          if (sum != 0) {
            ok = false;
            witness = witness_string({i, j, k, l}, sum, Rational(0));
          }
        }
  report.add("jacobi_identity", ok, witness);

  const bool symmetric = m.metric.is_symmetric();
  report.add("metric_symmetry", symmetric);
  report.add("metric_positive_definite", symmetric && is_positive_definite(m.metric));
  return report;
}

ConnectionCoefficients levi_civita_connection(const LieFrameManifold& m) {
  const int n = m.dim;
  const Tensor3& c = m.brackets;
  const Matrix& g = m.metric;

  // Constant frame metric: the three derivative terms of the Koszul formula
  // vanish and 2 g(nabla_i e_j, e_k) = -g(e_i,[e_j,e_k]) + g(e_j,[e_k,e_i])
  //                                    + g(e_k,[e_i,e_j]).
  ConnectionCoefficients gamma(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vector rhs(n);
      for (int k = 0; k < n; ++k) {
        Rational s = 0;
        for (int mm = 0; mm < n; ++mm)
          s += -c(j, k, mm) * g(i, mm) + c(k, i, mm) * g(j, mm) + c(i, j, mm) * g(k, mm);
        rhs[k] = s / 2;
      }
      const Vector coeffs = solve(g, rhs);  // g(m,k) Gamma(i,j,m) = rhs(k), g symmetric
      for (int k = 0; k < n; ++k) gamma(i, j, k) = coeffs[k];
    }
  }
  return gamma;
}

CurvatureTensor curvature_tensor(const LieFrameManifold& m,
                                 const ConnectionCoefficients& gamma) {
  const int n = m.dim;
  if (gamma.dim() != n) throw DimensionMismatch("curvature_tensor: connection shape mismatch");
  const Tensor3& c = m.brackets;
  CurvatureTensor riemann(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational s = 0;
          for (int mm = 0; mm < n; ++mm)
            s += gamma(j, k, mm) * gamma(i, mm, l) - gamma(i, k, mm) * gamma(j, mm, l) -
                 c(i, j, mm) * gamma(mm, k, l);
          riemann(i, j, k, l) = s;
        }
  return riemann;
}

CoTensor2 ricci_tensor(const LieFrameManifold& m, const CurvatureTensor& riemann) {
  const int n = m.dim;
  if (riemann.dim() != n) throw DimensionMismatch("ricci_tensor: curvature shape mismatch");
  CoTensor2 ricci(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Rational s = 0;
      for (int i = 0; i < n; ++i) s += riemann(i, j, k, i);
      ricci(j, k) = s;
    }
  return ricci;
}

Endomorphism ricci_operator(const LieFrameManifold& m, const CoTensor2& ricci) {
  return inverse(m.metric) * ricci;
}

Rational scalar_curvature(const LieFrameManifold& m, const CoTensor2& ricci) {
  const Endomorphism q = ricci_operator(m, ricci);
  Rational r = 0;
  for (int i = 0; i < m.dim; ++i) r += q(i, i);
  return r;
}

Geometry compute_geometry(const LieFrameManifold& m) {
  Geometry geo;
  geo.connection = levi_civita_connection(m);
  geo.riemann = curvature_tensor(m, geo.connection);
  geo.ricci = ricci_tensor(m, geo.riemann);
  geo.ricci_op = ricci_operator(m, geo.ricci);
  geo.scalar = 0;
  for (int i = 0; i < m.dim; ++i) geo.scalar += geo.ricci_op(i, i);
  return geo;
}

}  // namespace liegeo
