#pragma once

// Weighted sumsets sum_j c_j * RS(K_(m_j)) and exact membership by
// depth-first search with a failure memo.
//
// Search layout: parts are taken largest m first; within a part the c_j
// summands are chosen as a multiset (non-increasing index into the part's
// candidate list, which is sorted lexicographically descending), zero
// summands included, so each multiset is visited once.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "subcx/ranks/koszul_rs.hpp"

namespace subcx {

struct SumsetPart {
  int multiplicity = 0;
  int size = 0;  // m in RS(K_(m))
  friend bool operator==(const SumsetPart&, const SumsetPart&) = default;
};

struct WeightedSumsetSpec {
  std::vector<SumsetPart> parts;

  void validate() const {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (parts[j].multiplicity < 1) throw std::invalid_argument("sumset multiplicities must be positive");
      if (parts[j].size < 0) throw std::invalid_argument("sumset sizes must be non-negative");
      if (j > 0 && parts[j].size >= parts[j - 1].size)
        throw std::invalid_argument("sumset sizes must be distinct and descending");
    }
  }
  /// Length of the sequences in the sumset (largest m + 1).
  std::size_t length() const { return parts.empty() ? 0 : static_cast<std::size_t>(parts.front().size) + 1; }
  std::string to_string() const {
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : " + ") + std::to_string(p.multiplicity) + "*RS(K_" + std::to_string(p.size) + ")";
    return s.empty() ? "0" : s;
  }
  friend bool operator==(const WeightedSumsetSpec&, const WeightedSumsetSpec&) = default;
};

/// "3x2,2x1,1x0" -> parts (3,2), (2,1), (1,0).
inline WeightedSumsetSpec parse_sumset_spec(const std::string& text) {
  WeightedSumsetSpec spec;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto x = item.find('x');
    if (x == std::string::npos) throw std::invalid_argument("sumset part '" + item + "' is not of the form CxM");
    std::size_t u1 = 0, u2 = 0;
    auto mult_text = item.substr(0, x), size_text = item.substr(x + 1);
    int c = std::stoi(mult_text, &u1), m = std::stoi(size_text, &u2);
    if (u1 != mult_text.size() || u2 != size_text.size())
      throw std::invalid_argument("sumset part '" + item + "' is not of the form CxM");
    spec.parts.push_back({c, m});
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  spec.validate();
  return spec;
}

struct MembershipCertificate {
  bool member = false;
  /// chosen[j] lists the summands picked for part j (nonzero ones only).
  std::vector<std::vector<RankSequence>> chosen;
  std::uint64_t nodes = 0;
};

inline constexpr int kMaxSumsetCopies = 400;

inline MembershipCertificate sumset_membership(const RankSequence& r, const WeightedSumsetSpec& spec) {
  spec.validate();
  int copies = 0;
  for (const auto& p : spec.parts) {
    if (p.size > kMaxKoszulEnumeration)
      throw std::invalid_argument("sumset part size " + std::to_string(p.size) + " exceeds the enumeration cap");
    copies += p.multiplicity;
  }
  if (copies > kMaxSumsetCopies) throw std::invalid_argument("sumset too large for exact search");

  MembershipCertificate cert;
  cert.chosen.assign(spec.parts.size(), {});
  const std::size_t len = std::max(spec.length(), r.support_length());
  if (r.support_length() > spec.length()) return cert;  // longer than any sum can be

  // Candidates per part, lexicographically descending, padded to len.
  std::vector<std::vector<std::vector<int>>> cand(spec.parts.size());
  for (std::size_t j = 0; j < spec.parts.size(); ++j) {
    for (const auto& s : enumerate_koszul_rs(spec.parts[j].size)) cand[j].push_back(s.padded(len).values());
    std::sort(cand[j].begin(), cand[j].end(), std::greater<>());
  }
  // Slots in search order; cap[t][k] = max total still addable at position k from slot t on.
  std::vector<std::size_t> slot_part;
  for (std::size_t j = 0; j < spec.parts.size(); ++j)
    for (int c = 0; c < spec.parts[j].multiplicity; ++c) slot_part.push_back(j);
  const std::size_t S = slot_part.size();
  std::vector<std::vector<long>> cap(S + 1, std::vector<long>(len, 0));
  for (std::size_t t = S; t-- > 0;)
    for (std::size_t k = 0; k < len; ++k) cap[t][k] = cap[t + 1][k] + binomial(spec.parts[slot_part[t]].size, k);

  std::vector<int> residual = r.padded(len).values();
  std::set<std::tuple<std::size_t, std::size_t, std::vector<int>>> failed;
  std::vector<std::size_t> pick(S, 0);

  auto rec = [&](auto&& self, std::size_t t, std::size_t min_index) -> bool {
    ++cert.nodes;
    if (t == S) return std::all_of(residual.begin(), residual.end(), [](int x) { return x == 0; });
    for (std::size_t k = 0; k < len; ++k)
      if (residual[k] > cap[t][k]) return false;
    // A new part starts: any candidate index is allowed again.
    std::size_t first = (t > 0 && slot_part[t - 1] == slot_part[t]) ? min_index : 0;
    auto key = std::make_tuple(t, first, residual);
    if (failed.count(key)) return false;
    const auto& cs = cand[slot_part[t]];
    for (std::size_t c = first; c < cs.size(); ++c) {
      bool fits = true;
      for (std::size_t k = 0; k < len && fits; ++k) fits = cs[c][k] <= residual[k];
      if (!fits) continue;
      for (std::size_t k = 0; k < len; ++k) residual[k] -= cs[c][k];
      pick[t] = c;
      bool ok = self(self, t + 1, c);
      for (std::size_t k = 0; k < len; ++k) residual[k] += cs[c][k];
      if (ok) return true;
    }
    failed.insert(std::move(key));
    return false;
  };

  if (!rec(rec, 0, 0)) return cert;
  cert.member = true;
  for (std::size_t t = 0; t < S; ++t) {
    const auto& s = cand[slot_part[t]][pick[t]];
    if (std::all_of(s.begin(), s.end(), [](int x) { return x == 0; })) continue;
    cert.chosen[slot_part[t]].push_back(RankSequence(s).padded(spec.parts[slot_part[t]].size + 1));
  }
  return cert;
}

}  // namespace subcx
