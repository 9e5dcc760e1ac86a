#pragma once

// Exhaustive enumeration of subspaces of F_p^n through their reduced row
// echelon forms: a pivot set plus a free choice of every entry that is not
// forced by the echelon shape. Each subspace appears exactly once.

#include <cstdint>
#include <functional>
#include <vector>

#include "subcx/algebra/linalg.hpp"
#include "subcx/core/binomial.hpp"

namespace subcx {

/// Calls visit(S) for every k-dimensional subspace S of K^n; stops early when
/// visit returns false. Returns false iff it was stopped.
template <FiniteField K, class Visit>
bool for_each_subspace(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return true;
  constexpr std::uint32_t q = K::modulus;
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    // free slots: (row r, col c) with c > piv[r] and c not a pivot
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < n; ++c)
        if (!is_pivot[c]) slots.emplace_back(r, c);
    Matrix<K> m(k, n);
    for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = K(1);
    std::vector<std::uint32_t> digits(slots.size(), 0);
    while (true) {
      for (std::size_t s = 0; s < slots.size(); ++s) m(slots[s].first, slots[s].second) = K::from_residue(digits[s]);
      if (!visit(Subspace<K>::from_rows(m))) return false;
      std::size_t s = 0;
      while (s < digits.size() && ++digits[s] == q) digits[s++] = 0;
      if (s == digits.size()) break;
    }
    // next pivot combination
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return true;
}

/// Every k-dimensional subspace V with W <= V <= K^n, each exactly once:
/// V = W + U for U ranging over subspaces of the span of W's non-pivot coordinates.
template <FiniteField K, class Visit>
bool for_each_subspace_containing(const Subspace<K>& W, std::size_t k, Visit&& visit) {
  const std::size_t n = W.ambient();
  if (k < W.dim() || k > n) return true;
  const auto free = W.non_pivots();
  const auto base = W.basis();
  return for_each_subspace<K>(free.size(), k - W.dim(), [&](const Subspace<K>& U) {
    auto vecs = base;
    for (const auto& u : U.basis()) {
      std::vector<K> v(n, K(0));
      for (std::size_t t = 0; t < free.size(); ++t) v[free[t]] = u[t];
      vecs.push_back(std::move(v));
    }
    return visit(Subspace<K>::span(n, vecs));
  });
}

/// Total number of subspaces of every dimension containing W (saturating).
template <FiniteField K>
std::uint64_t count_subspaces_containing(const Subspace<K>& W) {
  std::uint64_t total = 0;
  const int free = static_cast<int>(W.ambient() - W.dim());
  for (int k = 0; k <= free; ++k) {
    auto g = gaussian_binomial(free, k, K::modulus);
    total = total + g < total ? UINT64_MAX : total + g;
  }
  return total;
}

}  // namespace subcx
