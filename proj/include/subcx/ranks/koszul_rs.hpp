#pragma once

// Rank sequences of subcomplexes of the Koszul complex K(x_1..x_m):
// r is the zero sequence, or r_0 = 1, r_1 <= m and r_{i+1} <= r_i^{(i)}
// for 1 <= i <= m-1. Each accepted r is realized by the coordinate subcomplex
// spanned by the first r_d size-d subsets in colex order (a compressed,
// hence down-closed, family).

#include <bit>
#include <set>
#include <stdexcept>
#include <vector>

#include "subcx/complexes/koszul.hpp"
#include "subcx/core/sequence.hpp"
#include "subcx/ranks/macaulay.hpp"

namespace subcx {

inline constexpr int kMaxKoszulEnumeration = 6;

inline bool is_koszul_rs(const RankSequence& r, int m) {
  if (m < 0) throw std::invalid_argument("Koszul size must be non-negative");
  if (r.support_length() > static_cast<std::size_t>(m) + 1) return false;
  if (r.is_zero()) return true;
  if (r[0] != 1) return false;
  if (r[1] > m) return false;
  for (int i = 1; i <= m - 1; ++i)
    if (r[i + 1] > macaulay_shift(r[i], i)) return false;
  return true;
}

/// Every accepted sequence, each of length m + 1, in increasing order.
inline std::set<RankSequence> enumerate_koszul_rs(int m, int cap = kMaxKoszulEnumeration) {
  if (m < 0) throw std::invalid_argument("Koszul size must be non-negative");
  if (m > cap) throw std::invalid_argument("enumeration is capped at m <= " + std::to_string(cap));
  std::set<RankSequence> out;
  out.insert(RankSequence(std::vector<int>(m + 1, 0)));
  std::vector<int> cur(m + 1, 0);
  cur[0] = 1;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos > m) {
      out.insert(RankSequence(cur));
      return;
    }
    std::int64_t bound = pos == 1 ? m : macaulay_shift(cur[pos - 1], pos - 1);
    bound = std::min<std::int64_t>(bound, binomial(m, pos));
    for (int v = 0; v <= bound; ++v) {
      cur[pos] = v;
      self(self, pos + 1);
    }
    cur[pos] = 0;
  };
  rec(rec, 1);
  return out;
}

/// Size-d subsets of {1..m} (bitmasks) in colex order, first `count` of them.
inline std::vector<std::uint32_t> colex_prefix(int m, int d, int count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << m) && static_cast<int>(out.size()) < count; ++s)
    if (std::popcount(s) == d) out.push_back(s);
  if (static_cast<int>(out.size()) < count) throw std::invalid_argument("not enough subsets for the requested rank");
  return out;
}

template <Field K>
struct KoszulWitness {
  GradedFreeComplex<K> sub;
  ComplexInclusion<K> inclusion;
};

/// The compressed coordinate subcomplex of koszul(m) with rank sequence r;
/// throws if r is not accepted by is_koszul_rs.
template <Field K>
KoszulWitness<K> koszul_rs_witness(const RankSequence& r, int m) {
  if (!is_koszul_rs(r, m)) throw std::invalid_argument("rank sequence " + r.to_string() + " is not realizable");
  auto G = koszul<K>(m);
  ExteriorBasis basis(m);
  std::vector<std::vector<std::size_t>> chosen(m + 1);
  for (int d = 0; d <= m; ++d)
    for (auto s : colex_prefix(m, d, r[d])) chosen[d].push_back(basis.index(s));
  std::vector<std::vector<int>> twists(m + 1);
  ComplexInclusion<K> phi;
  for (int d = 0; d <= m; ++d) {
    twists[d].assign(chosen[d].size(), -d);
    Matrix<K> inc(G.rank(d), chosen[d].size());
    for (std::size_t c = 0; c < chosen[d].size(); ++c) inc(chosen[d][c], c) = K(1);
    phi.maps.push_back(std::move(inc));
  }
  std::vector<PolyMatrix<K>> diffs;
  for (int d = 1; d <= m; ++d) {
    const auto full = G.d(d);
    PolyMatrix<K> D(chosen[d - 1].size(), chosen[d].size(), Poly<K>(m));
    for (std::size_t c = 0; c < chosen[d].size(); ++c)
      for (std::size_t rr = 0; rr < chosen[d - 1].size(); ++rr) D.set(rr, c, full.at(chosen[d - 1][rr], chosen[d][c]));
    diffs.push_back(std::move(D));
  }
  return {GradedFreeComplex<K>(m, std::move(twists), std::move(diffs)), std::move(phi)};
}

}  // namespace subcx
