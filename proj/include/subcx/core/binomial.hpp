#pragma once

#include <cstdint>
#include <limits>

namespace subcx {

/// C(n, k) with C = 0 outside 0 <= k <= n. Exact while the result fits.
constexpr std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Saturating product used for search budgets.
constexpr std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

/// Number of k-dimensional subspaces of F_q^n (saturating).
constexpr std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q) {
  if (k < 0 || k > n) return 0;
  // prod_{i<k} (q^{n-i} - 1) / (q^{i+1} - 1), evaluated incrementally so each
  // partial quotient is itself a Gaussian binomial and stays integral.
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    std::uint64_t num = 1, den = 1;
    for (int j = 0; j < n - i; ++j) num = saturating_mul(num, q);
    for (int j = 0; j < i + 1; ++j) den = saturating_mul(den, q);
    num -= 1;
    den -= 1;
    if (r == std::numeric_limits<std::uint64_t>::max() || num == std::numeric_limits<std::uint64_t>::max() - 1)
      return std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 t = static_cast<unsigned __int128>(r) * num;
    t /= den;
    if (t > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    r = static_cast<std::uint64_t>(t);
  }
  return r;
}

}  // namespace subcx
