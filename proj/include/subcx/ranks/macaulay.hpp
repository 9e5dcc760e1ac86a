#pragma once

// Macaulay expansions a = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j),
// a_i > a_{i-1} > ... > a_j >= j >= 1, and the shift
// a^{(i)} = C(a_i, i+1) + ... + C(a_j, j+1), with 0^{(i)} = 0.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "subcx/core/binomial.hpp"

namespace subcx {

/// Greedy expansion, returned top index first: (a_i, a_{i-1}, ..., a_j).
inline std::vector<std::int64_t> macaulay_expansion(std::int64_t a, int i) {
  if (a <= 0) throw std::invalid_argument("Macaulay expansion needs a >= 1");
  if (i < 1) throw std::invalid_argument("Macaulay expansion needs i >= 1");
  std::vector<std::int64_t> out;
  std::int64_t rest = a;
  for (int k = i; k >= 1 && rest > 0; --k) {
    std::int64_t top = k;
    while (binomial(top + 1, k) <= rest) ++top;
    out.push_back(top);
    rest -= binomial(top, k);
  }
  std::int64_t check = 0;
  for (std::size_t t = 0; t < out.size(); ++t) check += binomial(out[t], i - static_cast<int>(t));
  if (rest != 0 || check != a) throw std::logic_error("Macaulay expansion failed to re-sum");
  return out;
}

inline std::int64_t macaulay_shift(std::int64_t a, int i) {
  if (a < 0) throw std::invalid_argument("Macaulay shift needs a >= 0");
  if (a == 0) return 0;
  auto e = macaulay_expansion(a, i);
  std::int64_t s = 0;
  for (std::size_t t = 0; t < e.size(); ++t) s += binomial(e[t], i - static_cast<int>(t) + 1);
  return s;
}

}  // namespace subcx
