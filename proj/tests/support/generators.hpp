#pragma once

// Deterministic pseudo-random inputs for property tests (SplitMix64, fixed seeds).

#include <cstdint>
#include <vector>

#include "subcx/algebra/poly.hpp"
#include "subcx/exterior/algebra.hpp"

namespace subcx::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin(int percent = 50) { return uniform(1, 100) <= percent; }

 private:
  std::uint64_t s_;
};

inline constexpr std::uint64_t kSeed = 20240611;

/// Homogeneous form of degree `deg` with small integer coefficients.
template <Field K>
Poly<K> random_form(Rng& g, int nvars, int deg, int density = 60) {
  Poly<K> p(nvars);
  for (const auto& m : monomials_of_degree(nvars, deg))
    if (g.coin(density)) p += Poly<K>::monomial(m, K(g.uniform(-3, 3)));
  return p;
}

/// Homogeneous exterior element of the given size.
template <Field K>
ExtElement<K> random_ext(Rng& g, int n, int size, int density = 50) {
  ExteriorBasis basis(n);
  ExtElement<K> x(n);
  for (auto s : basis.of_size(size))
    if (g.coin(density)) x.add(ExtMonomial{s}, K(g.uniform(-2, 2)));
  return x;
}

inline std::vector<int> random_sequence(Rng& g, std::size_t len, int hi) {
  std::vector<int> v(len);
  for (auto& x : v) x = g.uniform(0, hi);
  return v;
}

}  // namespace subcx::testing
