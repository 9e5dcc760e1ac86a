#pragma once

// Canonical text form of polynomials:
//   terms in descending grevlex joined by " + ", each "c*x1^a1*x3^a3"
//   (variables with zero exponent omitted, constants written as "c"),
//   coefficients "num/den" over QQ or "k mod p" over GF(p), zero as "0".
// The parser also accepts looser hand-written input such as "x1^2-2*x2*x3";
// coefficients always need an explicit "*".

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "subcx/algebra/poly.hpp"

namespace subcx {

template <Field K>
std::string format_poly(const Poly<K>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) out += " + ";
    first = false;
    out += c.to_string();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      out += "*x" + std::to_string(i + 1) + "^" + std::to_string(m[i]);
    }
  }
  return out;
}

namespace detail {

inline std::vector<std::string> split_top_level_terms(std::string_view s) {
  std::vector<std::string> terms;
  std::string cur;
  char prev = 0;  // last non-space character
  for (char ch : s) {
    if ((ch == '+' || ch == '-') && prev != 0 && prev != '^' && prev != '/' && prev != '*' && prev != '+' &&
        prev != '-') {
      terms.push_back(cur);
      cur.clear();
      if (ch == '-') cur.push_back('-');
      prev = ch;
      continue;
    }
    cur.push_back(ch);
    if (ch != ' ' && ch != '\t') prev = ch;
  }
  terms.push_back(cur);
  return terms;
}

}  // namespace detail

template <Field K>
Poly<K> parse_poly(std::string_view text, int nvars) {
  Poly<K> p(nvars);
  auto body = detail::trim(text);
  if (body.empty()) throw std::invalid_argument("empty polynomial");
  for (const auto& raw : detail::split_top_level_terms(body)) {
    std::string_view term = detail::trim(raw);
    bool negate = false;
    while (!term.empty() && (term.front() == '+' || term.front() == '-')) {
      if (term.front() == '-') negate = !negate;
      term.remove_prefix(1);
      term = detail::trim(term);
    }
    if (term.empty()) throw std::invalid_argument("dangling sign in polynomial '" + std::string(text) + "'");
    K coeff(1);
    Monomial mono(nvars, 0);
    std::size_t start = 0;
    while (start <= term.size()) {
      auto star = term.find('*', start);
      auto factor = detail::trim(term.substr(start, star == std::string_view::npos ? term.npos : star - start));
      if (factor.empty()) throw std::invalid_argument("empty factor in '" + std::string(text) + "'");
      if (factor.front() == 'x') {
        auto caret = factor.find('^');
        auto idx_text = factor.substr(1, caret == std::string_view::npos ? factor.npos : caret - 1);
        if (!detail::is_integer_literal(idx_text))
          throw std::invalid_argument("bad variable '" + std::string(factor) + "'");
        int idx = std::stoi(std::string(idx_text));
        if (idx < 1 || idx > nvars)
          throw std::invalid_argument("variable x" + std::to_string(idx) + " outside ring with " +
                                      std::to_string(nvars) + " variables");
        int e = 1;
        if (caret != std::string_view::npos) {
          auto e_text = detail::trim(factor.substr(caret + 1));
          if (!detail::is_integer_literal(e_text)) throw std::invalid_argument("bad exponent in '" + std::string(factor) + "'");
          e = std::stoi(std::string(e_text));
          if (e < 0) throw std::invalid_argument("negative exponent in '" + std::string(factor) + "'");
        }
        mono[idx - 1] += e;
      } else {
        coeff *= K::parse(factor);
      }
      if (star == std::string_view::npos) break;
      start = star + 1;
    }
    p.add_term(mono, negate ? -coeff : coeff);
  }
  return p;
}

}  // namespace subcx
