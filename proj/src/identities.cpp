#include "liegeo/identities.hpp"

#include "liegeo/tensor_calculus.hpp"

namespace liegeo {

ValidationReport frame_identity_suite(const LieFrameManifold& m, const Geometry& geo) {
  const int n = m.dim;
  const Tensor3& gamma = geo.connection;
  const Tensor4& riemann = geo.riemann;
  const Matrix& g = m.metric;
  ValidationReport report("identities");

  bool ok = true;
  std::string witness;
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j)
      for (int k = 0; k < n && ok; ++k) {
        const Rational lhs = gamma(i, j, k) - gamma(j, i, k);
        if (lhs != m.brackets(i, j, k)) {
          ok = false;
          witness = witness_string({i, j, k}, lhs, m.brackets(i, j, k));
        }
      }
  report.add("torsion_free", ok, witness);

  ok = true;
  witness.clear();
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j)
      for (int k = 0; k < n && ok; ++k) {
        Rational s = 0;  // frame metric components are constant, so nabla g = 0
        for (int mm = 0; mm < n; ++mm)
          s += gamma(i, j, mm) * g(mm, k) + gamma(i, k, mm) * g(j, mm);
        if (s != 0) {
          ok = false;
          witness = witness_string({i, j, k}, s, Rational(0));
        }
      }
  report.add("metric_compatible", ok, witness);

  ok = true;
  witness.clear();
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j)
      for (int k = 0; k < n && ok; ++k)
        for (int l = 0; l < n && ok; ++l)
          if (riemann(i, j, k, l) != -riemann(j, i, k, l)) {
            ok = false;
            witness = witness_string({i, j, k, l}, riemann(i, j, k, l), -riemann(j, i, k, l));
          }
  report.add("curvature_antisymmetry", ok, witness);

  Tensor4 lowered(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational s = 0;
          for (int mm = 0; mm < n; ++mm) s += riemann(i, j, k, mm) * g(mm, l);
          lowered(i, j, k, l) = s;
        }

  ok = true;
  witness.clear();
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j)
      for (int k = 0; k < n && ok; ++k)
        for (int l = 0; l < n && ok; ++l)
          if (lowered(i, j, k, l) != -lowered(i, j, l, k)) {
            ok = false;
            witness = witness_string({i, j, k, l}, lowered(i, j, k, l), -lowered(i, j, l, k));
          }
  report.add("lowered_last_pair_antisymmetry", ok, witness);

  ok = true;
  witness.clear();
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j)
      for (int k = 0; k < n && ok; ++k)
        for (int l = 0; l < n && ok; ++l)
          if (lowered(i, j, k, l) != lowered(k, l, i, j)) {
            ok = false;
            witness = witness_string({i, j, k, l}, lowered(i, j, k, l), lowered(k, l, i, j));
          }
  report.add("pair_symmetry", ok, witness);

  ok = true;
  witness.clear();
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j)
      for (int k = 0; k < n && ok; ++k)
        for (int l = 0; l < n && ok; ++l) {
          const Rational s = riemann(i, j, k, l) + riemann(j, k, i, l) + riemann(k, i, j, l);
          if (s != 0) {
            ok = false;
            witness = witness_string({i, j, k, l}, s, Rational(0));
          }
        }
  report.add("first_bianchi", ok, witness);

  std::vector<Tensor4> grad;
  grad.reserve(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a)
    grad.push_back(covariant_derivative_cotensor4_along(gamma, lowered, a));
  ok = true;
  witness.clear();
  for (int a = 0; a < n && ok; ++a)
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k)
          for (int l = 0; l < n && ok; ++l) {
            const Rational s = grad[static_cast<size_t>(a)](i, j, k, l) +
                               grad[static_cast<size_t>(i)](j, a, k, l) +
                               grad[static_cast<size_t>(j)](a, i, k, l);
            if (s != 0) {
              ok = false;
              witness = witness_string({a, i, j, k, l}, s, Rational(0));
            }
          }
  report.add("second_bianchi", ok, witness);

  report.add("ricci_symmetric", geo.ricci.is_symmetric());
  return report;
}

}  // namespace liegeo
