#pragma once

// Runtime choice of a coefficient field: calls f(GF<p>{}) for a supported
// prime p, or f(Rational{}) for QQ.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "subcx/algebra/field.hpp"

namespace subcx {

inline constexpr std::array<std::uint32_t, 11> kSupportedPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};

template <class F>
decltype(auto) with_prime_field(std::uint32_t p, F&& f) {
  switch (p) {
    case 2: return f(GF<2>{});
    case 3: return f(GF<3>{});
    case 5: return f(GF<5>{});
    case 7: return f(GF<7>{});
    case 11: return f(GF<11>{});
    case 13: return f(GF<13>{});
    case 17: return f(GF<17>{});
    case 19: return f(GF<19>{});
    case 23: return f(GF<23>{});
    case 29: return f(GF<29>{});
    case 31: return f(GF<31>{});
    default:
      throw std::invalid_argument("unsupported prime " + std::to_string(p) + " (use a prime up to 31)");
  }
}

/// "GF(5)", "gf5", "5" -> 5.
inline std::uint32_t parse_prime_field(std::string text) {
  std::string digits;
  for (char c : text)
    if (c >= '0' && c <= '9') digits += c;
  const bool shape_ok = text == digits || text == "GF(" + digits + ")" || text == "gf" + digits ||
                        text == "GF" + digits || text == "F" + digits;
  if (digits.empty() || digits.size() > 3 || !shape_ok) throw std::invalid_argument("cannot read prime field '" + text + "'");
  return static_cast<std::uint32_t>(std::stoul(digits));
}

/// "QQ" runs f(Rational{}); anything else names a prime field.
template <class F>
decltype(auto) with_field(const std::string& name, F&& f) {
  if (name == "QQ" || name == "Q") return f(Rational{});
  return with_prime_field(parse_prime_field(name), std::forward<F>(f));
}

}  // namespace subcx
