#ifndef LIEGEO_TESTS_FUZZ_HPP
#define LIEGEO_TESTS_FUZZ_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "liegeo/contact.hpp"
#include "liegeo/linalg.hpp"

namespace liegeo::testing {

// Deterministic generators for valid frame models. Every instance satisfies
// bracket antisymmetry and Jacobi by construction: seed algebras with known
// brackets, pushed through exact unimodular basis changes, with transported
// or freshly generated positive-definite metrics.

struct FuzzCase {
  std::string label;
  LieFrameManifold m;
  std::optional<AlmostContactStructure> contact;
  bool kenmotsu = false;  // expected to pass verify_kenmotsu
};

class FrameFuzzer {
 public:
  explicit FrameFuzzer(uint64_t seed) : rng_(seed) {}

  std::vector<FuzzCase> cases(int count) {
    std::vector<FuzzCase> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
      if (i % 16 == 15) {
        out.push_back(kenmotsu_case(7, i));
        continue;
      }
      switch (i % 8) {
        case 0: out.push_back(generic_case(abelian(3), "abelian3", i)); break;
        case 1: out.push_back(generic_case(heisenberg3(), "heisenberg3", i)); break;
        case 2: out.push_back(generic_case(so3(), "so3", i)); break;
        case 3: out.push_back(generic_case(sl2(), "sl2", i)); break;
        case 4: out.push_back(kenmotsu_case(3, i)); break;
        case 5: out.push_back(kenmotsu_case(5, i)); break;
        case 6: out.push_back(generic_case(scaled_hyperbolic(3), "scaled_hyperbolic3", i)); break;
        default: out.push_back(generic_case(abelian(5), "abelian5", i)); break;
      }
    }
    return out;
  }

  // Small nonzero rational, numerator in ±1..2, denominator 1..2.
  Rational small_rational() {
    static const int nums[] = {-2, -1, 1, 2};
    return Rational(nums[pick(4)], pick(2) + 1);
  }

  // Product of random shears: exactly invertible, determinant 1.
  Matrix random_basis_change(int dim) {
    Matrix p = Matrix::identity(dim);
    const int shears = 4 + pick(3);
    for (int s = 0; s < shears; ++s) {
      const int i = pick(dim);
      int j = pick(dim);
      if (i == j) j = (j + 1) % dim;
      Matrix shear = Matrix::identity(dim);
      shear(i, j) = small_rational();
      p = p * shear;
    }
    return p;
  }

  // L^T D L with unit lower-triangular L and positive diagonal D.
  Matrix random_spd_metric(int dim) {
    Matrix l = Matrix::identity(dim);
    for (int i = 1; i < dim; ++i)
      for (int j = 0; j < i; ++j)
        if (pick(2) == 0) l(i, j) = small_rational();
    Matrix d(dim, dim);
    for (int i = 0; i < dim; ++i) d(i, i) = Rational(1 + pick(3), 1 + pick(2));
    return l.transposed() * d * l;
  }

  static LieFrameManifold transport(const LieFrameManifold& m, const Matrix& p) {
    const int n = m.dim;
    const Matrix pinv = inverse(p);
    Tensor3 c(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Vector w(n);
        for (int i = 0; i < n; ++i) {
          if (p(i, a) == 0) continue;
          for (int j = 0; j < n; ++j) {
            if (p(j, b) == 0) continue;
            const Rational f = p(i, a) * p(j, b);
            for (int k = 0; k < n; ++k) w[k] += f * m.brackets(i, j, k);
          }
        }
        const Vector back = pinv * w;
        for (int k = 0; k < n; ++k) c(a, b, k) = back[k];
      }
    return LieFrameManifold(n, std::move(c), p.transposed() * m.metric * p);
  }

  static AlmostContactStructure transport_contact(const LieFrameManifold& transported,
                                                  const AlmostContactStructure& acs,
                                                  const Matrix& p) {
    const Matrix pinv = inverse(p);
    return make_almost_contact(transported, pinv * acs.phi * p, pinv * acs.xi);
  }

 private:
  int pick(int n) { return static_cast<int>(rng_() % static_cast<uint64_t>(n)); }

  static LieFrameManifold abelian(int dim) {
    return LieFrameManifold(dim, Tensor3(dim), Matrix::identity(dim));
  }

  static LieFrameManifold heisenberg3() {
    Tensor3 c(3);
    c(0, 1, 2) = 1;
    c(1, 0, 2) = -1;
    return LieFrameManifold(3, std::move(c), Matrix::identity(3));
  }

  static LieFrameManifold so3() {
    Tensor3 c(3);
    c(0, 1, 2) = 1; c(1, 0, 2) = -1;
    c(1, 2, 0) = 1; c(2, 1, 0) = -1;
    c(2, 0, 1) = 1; c(0, 2, 1) = -1;
    return LieFrameManifold(3, std::move(c), Matrix::identity(3));
  }

  static LieFrameManifold sl2() {
    Tensor3 c(3);
    c(0, 1, 1) = 2; c(1, 0, 1) = -2;
    c(0, 2, 2) = -2; c(2, 0, 2) = 2;
    c(1, 2, 0) = 1; c(2, 1, 0) = -1;
    return LieFrameManifold(3, std::move(c), Matrix::identity(3));
  }

  // [e_i, e_dim] = e_i: hyperbolic space with its standard Kenmotsu structure.
  static LieFrameManifold hyperbolic(int dim) {
    Tensor3 c(dim);
    for (int i = 0; i + 1 < dim; ++i) {
      c(i, dim - 1, i) = 1;
      c(dim - 1, i, i) = -1;
    }
    return LieFrameManifold(dim, std::move(c), Matrix::identity(dim));
  }

  LieFrameManifold scaled_hyperbolic(int dim) {
    const Rational alpha(2 + pick(3), 1);  // != 1, breaks the Kenmotsu rule
    Tensor3 c(dim);
    for (int i = 0; i + 1 < dim; ++i) {
      c(i, dim - 1, i) = alpha;
      c(dim - 1, i, i) = -alpha;
    }
    return LieFrameManifold(dim, std::move(c), Matrix::identity(dim));
  }

  static AlmostContactStructure standard_contact(const LieFrameManifold& m) {
    const int dim = m.dim;
    Endomorphism phi(dim, dim);
    for (int k = 0; k + 1 < dim - 1; k += 2) {
      phi(k + 1, k) = 1;
      phi(k, k + 1) = -1;
    }
    return make_almost_contact(m, std::move(phi), Vector::basis(dim, dim - 1));
  }

  FuzzCase generic_case(LieFrameManifold seed, const std::string& family, int index) {
    const Matrix p = random_basis_change(seed.dim);
    LieFrameManifold base(seed.dim, seed.brackets, random_spd_metric(seed.dim));
    LieFrameManifold m = transport(base, p);
    return FuzzCase{family + "#" + std::to_string(index), std::move(m), std::nullopt, false};
  }

  FuzzCase kenmotsu_case(int dim, int index) {
    LieFrameManifold seed = hyperbolic(dim);
    AlmostContactStructure acs = standard_contact(seed);
    const Matrix p = random_basis_change(dim);
    LieFrameManifold m = transport(seed, p);
    AlmostContactStructure transported = transport_contact(m, acs, p);
    return FuzzCase{"kenmotsu" + std::to_string(dim) + "#" + std::to_string(index),
                    std::move(m), std::move(transported), true};
  }

  std::mt19937_64 rng_;
};

}  // namespace liegeo::testing

#endif
