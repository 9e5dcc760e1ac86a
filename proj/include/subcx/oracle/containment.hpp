#pragma once

// Brute-force check of the Hilbert-function containment
//   HF(N_{n,d}) <= HF(N_{n,d-1}) + HF(Nbar_{n-1,d})
// where HF(N) is the set of Hilbert functions of graded submodules of N,
// each read from its own generator degree, and Nbar_{n-1,d} is N_{n-1,d}
// over the exterior algebra on n generators. For n = 1 the identity
// HF(Nbar_{1,d}) = HF(E_(a-1)) over a generators is checked instead.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "subcx/bgg/tate.hpp"
#include "subcx/oracle/submodule_hfs.hpp"

namespace subcx {

struct ContainmentReport {
  int n = 0, d = 0;
  std::string field;
  std::set<HilbertFunction> lhs, rhs;
  /// Elements of lhs missing from rhs (empty iff the containment holds).
  std::vector<HilbertFunction> missing;
  /// Elements of rhs outside lhs (nonempty iff the containment is strict).
  std::vector<HilbertFunction> extra;
  bool holds() const { return missing.empty(); }
  bool strict() const { return holds() && !extra.empty(); }
};

inline std::set<HilbertFunction> hf_sumset(const std::set<HilbertFunction>& a, const std::set<HilbertFunction>& b) {
  std::set<HilbertFunction> out;
  for (const auto& x : a)
    for (const auto& y : b) out.insert(x + y);
  return out;
}

namespace detail {
inline void compare_hf_sets(ContainmentReport& rep) {
  for (const auto& h : rep.lhs)
    if (!rep.rhs.count(h)) rep.missing.push_back(h);
  for (const auto& h : rep.rhs)
    if (!rep.lhs.count(h)) rep.extra.push_back(h);
}
}  // namespace detail

/// n >= 2, d >= 2: the containment above. n = 1: submodule HF sets of
/// Nbar_{1,d} and E_(a-1) over a = ambient (default 2) generators, compared for equality.
template <FiniteField K>
ContainmentReport verify_containment(int n, int d, std::optional<int> ambient = std::nullopt,
                                     std::size_t cap = kMaxSubmoduleEnumerationDim) {
  if (n < 1 || d < 1) throw std::invalid_argument("containment check needs n, d >= 1");
  ContainmentReport rep;
  rep.n = n;
  rep.d = d;
  rep.field = K::field_name();
  if (n == 1) {
    const int a = ambient.value_or(2);
    if (a < 1) throw std::invalid_argument("ambient must be at least 1");
    rep.lhs = enumerate_submodule_hfs(tate_Nnd<K>(1, d, a), cap);
    rep.rhs = enumerate_submodule_hfs(exterior_quotient<K>(a, a - 1), cap);
  } else {
    if (d < 2) throw std::invalid_argument("containment check needs d >= 2 when n >= 2");
    rep.lhs = enumerate_submodule_hfs(tate_Nnd<K>(n, d), cap);
    rep.rhs = hf_sumset(enumerate_submodule_hfs(tate_Nnd<K>(n, d - 1), cap),
                        enumerate_submodule_hfs(tate_Nnd<K>(n - 1, d, n), cap));
  }
  detail::compare_hf_sets(rep);
  return rep;
}

}  // namespace subcx
