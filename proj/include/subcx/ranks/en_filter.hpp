#pragma once

// Necessary conditions on rank sequences of subcomplexes of EN(M^{n,d}) and
// of its linear strand L_{n,d}:
//   RS(L_{n,d}) is contained in sum_{j=0}^{n-1} C(n-j+d-2, d-1) RS(K_(n-j-1)),
// and a subcomplex of the whole complex has the form (0, r') or (1, r') with
// r' in RS(L_{n,d}). Passing is "possibly admissible", never a proof of existence.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subcx/ranks/sumset.hpp"

namespace subcx {

inline WeightedSumsetSpec en_weights(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("EN weights need n, d >= 1");
  WeightedSumsetSpec spec;
  for (int j = 0; j <= n - 1; ++j)
    spec.parts.push_back({static_cast<int>(binomial(n - j + d - 2, d - 1)), n - j - 1});
  return spec;
}

/// Weights for a p x q matrix: sum_{j=0}^{q-p} C(q-j-1, p-1) RS(K_(q-p-j)).
inline WeightedSumsetSpec en_weights_pq(int p, int q) {
  if (p < 1 || p > q) throw std::invalid_argument("EN weights need 1 <= p <= q");
  WeightedSumsetSpec spec;
  for (int j = 0; j <= q - p; ++j) spec.parts.push_back({static_cast<int>(binomial(q - j - 1, p - 1)), q - p - j});
  if (!(spec == en_weights(q - p + 1, p))) throw std::logic_error("EN weight formulas disagree");
  return spec;
}

enum class FilterMode { full, strand };
enum class Admissibility { possibly_admissible, ruled_out };

inline std::string to_string(Admissibility a) {
  return a == Admissibility::possibly_admissible ? "possibly-admissible" : "ruled-out";
}

struct FilterVerdict {
  Admissibility verdict = Admissibility::ruled_out;
  std::string reason;
  std::optional<MembershipCertificate> certificate;
};

/// Full mode: r = (r_0, r') against EN(M^{n,d}). Strand mode: r' against L_{n,d}.
/// For d = 1 the complex is the Koszul complex and the test is exact.
inline FilterVerdict en_rs_filter(const RankSequence& r, int n, int d, FilterMode mode = FilterMode::full) {
  if (n < 1 || d < 1) throw std::invalid_argument("EN filter needs n, d >= 1");
  const std::size_t strand_len = static_cast<std::size_t>(n);
  std::vector<int> tail;
  int head = 1;
  if (mode == FilterMode::full) {
    head = r[0];
    for (std::size_t k = 1; k < r.size(); ++k) tail.push_back(r[k]);
  } else {
    tail = r.values();
  }
  RankSequence strand(tail);
  if (strand.support_length() > strand_len)
    return {Admissibility::ruled_out, "longer than the complex", std::nullopt};
  if (head != 0 && head != 1) return {Admissibility::ruled_out, "augmentation rank must be 0 or 1", std::nullopt};
  if (d == 1) {
    // EN(M^{n,1}) is K(x_1..x_n); a strand subcomplex extends by S^1.
    std::vector<int> full{mode == FilterMode::full ? head : 1};
    full.insert(full.end(), tail.begin(), tail.end());
    if (is_koszul_rs(RankSequence(full), n)) return {Admissibility::possibly_admissible, "Koszul condition holds", std::nullopt};
    return {Admissibility::ruled_out, "Koszul condition fails", std::nullopt};
  }
  auto cert = sumset_membership(strand, en_weights(n, d));
  if (!cert.member) return {Admissibility::ruled_out, "sumset non-member", std::nullopt};
  return {Admissibility::possibly_admissible, "sumset member", std::move(cert)};
}

}  // namespace subcx
