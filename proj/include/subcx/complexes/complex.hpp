#pragma once

// Graded free complexes over S = K[x_1..x_n]. Position i holds a free module
// sum_c S(t_{i,c}); d_i maps position i to i-1 and is stored as a
// rank(i-1) x rank(i) polynomial matrix. An entry (r,c) of d_i must be
// homogeneous of degree t_{i-1,r} - t_{i,c}.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subcx/algebra/linalg.hpp"
#include "subcx/algebra/poly.hpp"
#include "subcx/core/sequence.hpp"

namespace subcx {

template <Field K>
using PolyMatrix = SparseMatrix<Poly<K>>;

template <Field K>
class GradedFreeComplex {
 public:
  GradedFreeComplex() = default;
  /// twists[i][c] is the twist of generator c at position i; diffs[i-1] is d_i.
  GradedFreeComplex(int nvars, std::vector<std::vector<int>> twists, std::vector<PolyMatrix<K>> diffs)
      : nvars_(nvars), twists_(std::move(twists)), diffs_(std::move(diffs)) {
    std::size_t want = twists_.empty() ? 0 : twists_.size() - 1;
    if (diffs_.size() != want)
      throw std::invalid_argument("a complex with " + std::to_string(twists_.size()) + " terms needs " +
                                  std::to_string(want) + " differentials, got " + std::to_string(diffs_.size()));
    for (std::size_t i = 1; i < twists_.size(); ++i) {
      const auto& d = diffs_[i - 1];
      if (d.rows() != twists_[i - 1].size() || d.cols() != twists_[i].size())
        throw std::invalid_argument("d_" + std::to_string(i) + " is " + std::to_string(d.rows()) + "x" +
                                    std::to_string(d.cols()) + " but the terms have ranks " +
                                    std::to_string(twists_[i - 1].size()) + " and " + std::to_string(twists_[i].size()));
      if (d.zero().nvars() != nvars_) throw std::invalid_argument("differential lives in a different ring");
    }
  }

  /// Uniform twist per position: terms[i] = S(twist[i])^{rank[i]}.
  static GradedFreeComplex uniform(int nvars, const std::vector<std::size_t>& ranks, const std::vector<int>& twists,
                                   std::vector<PolyMatrix<K>> diffs) {
    if (ranks.size() != twists.size()) throw std::invalid_argument("ranks and twists differ in length");
    std::vector<std::vector<int>> t(ranks.size());
    for (std::size_t i = 0; i < ranks.size(); ++i) t[i].assign(ranks[i], twists[i]);
    return GradedFreeComplex(nvars, std::move(t), std::move(diffs));
  }

  int nvars() const { return nvars_; }
  /// Number of positions (0 for the zero complex).
  std::size_t length() const { return twists_.size(); }
  std::size_t rank(std::size_t i) const { return i < twists_.size() ? twists_[i].size() : 0; }
  const std::vector<std::vector<int>>& all_twists() const { return twists_; }
  std::vector<int> twists(std::size_t i) const { return i < twists_.size() ? twists_[i] : std::vector<int>{}; }
  /// The common twist of position i, if every generator there has the same one.
  std::optional<int> uniform_twist(std::size_t i) const {
    if (i >= twists_.size() || twists_[i].empty()) return std::nullopt;
    const auto& t = twists_[i];
    if (std::any_of(t.begin(), t.end(), [&](int x) { return x != t.front(); })) return std::nullopt;
    return t.front();
  }
  const std::vector<PolyMatrix<K>>& diffs() const { return diffs_; }

  /// d_i : position i -> i-1, a zero matrix of the right shape outside the stored range.
  PolyMatrix<K> d(std::size_t i) const {
    if (i >= 1 && i < twists_.size()) return diffs_[i - 1];
    std::size_t rows = i >= 1 ? rank(i - 1) : 0;
    return PolyMatrix<K>(rows, rank(i), Poly<K>(nvars_));
  }

  RankSequence rank_sequence() const {
    std::vector<int> r(twists_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<int>(twists_[i].size());
    return RankSequence(std::move(r));
  }

  template <Field L>
  GradedFreeComplex<L> change_field() const {
    std::vector<PolyMatrix<L>> diffs;
    for (const auto& d : diffs_)
      diffs.push_back(d.map([](const Poly<K>& p) { return p.template change_field<L>(); }, Poly<L>(nvars_)));
    return GradedFreeComplex<L>(nvars_, twists_, std::move(diffs));
  }

  friend bool operator==(const GradedFreeComplex& a, const GradedFreeComplex& b) {
    return a.nvars_ == b.nvars_ && a.twists_ == b.twists_ && a.diffs_ == b.diffs_;
  }

 private:
  int nvars_ = 0;
  std::vector<std::vector<int>> twists_;
  std::vector<PolyMatrix<K>> diffs_;
};

/// Constant maps phi_i : F_i -> G_i, stored as rank(G_i) x rank(F_i) matrices.
template <Field K>
struct ComplexInclusion {
  std::vector<Matrix<K>> maps;
};

struct CheckResult {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

template <Field K>
PolyMatrix<K> constant_matrix(const Matrix<K>& m, int nvars) {
  PolyMatrix<K> out(m.rows(), m.cols(), Poly<K>(nvars));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out.set(r, c, Poly<K>::constant(nvars, m(r, c)));
  return out;
}

/// Composites vanish and every entry has the degree its twists force.
template <Field K>
CheckResult check_complex(const GradedFreeComplex<K>& C) {
  for (std::size_t i = 1; i < C.length(); ++i) {
    auto ti = C.twists(i), tp = C.twists(i - 1);
    const auto& di = C.diffs()[i - 1];
    for (const auto& [idx, p] : di.entries()) {
      int want = tp[idx.first] - ti[idx.second];
      if (!p.is_homogeneous() || *p.degree() != want)
        return CheckResult::fail("entry (" + std::to_string(idx.first) + "," + std::to_string(idx.second) + ") of d_" +
                                 std::to_string(i) + " is not homogeneous of degree " + std::to_string(want));
    }
  }
  for (std::size_t i = 1; i + 1 < C.length(); ++i)
    if (!(C.d(i) * C.d(i + 1)).is_zero())
      return CheckResult::fail("d_" + std::to_string(i) + " * d_" + std::to_string(i + 1) + " is not zero");
  return {};
}

template <Field K>
bool verify_complex(const GradedFreeComplex<K>& C) {
  return check_complex(C).ok;
}

/// Def. of subcomplex: every phi_i injective over K (full column rank), graded
/// (nonzero entries only between equal twists), and phi_{i-1} f_i = g_i phi_i.
/// Missing positions and maps are read as zero; a map of the wrong shape throws.
template <Field K>
CheckResult check_subcomplex(const GradedFreeComplex<K>& F, const GradedFreeComplex<K>& G,
                             const ComplexInclusion<K>& phi) {
  if (F.length() > 0 && G.length() > 0 && F.nvars() != G.nvars())
    throw std::invalid_argument("complexes over different rings");
  const int nvars = G.length() > 0 ? G.nvars() : F.nvars();
  const std::size_t L = std::max({F.length(), G.length(), phi.maps.size()});
  auto map_at = [&](std::size_t i) {
    if (i < phi.maps.size()) return phi.maps[i];
    return Matrix<K>(G.rank(i), F.rank(i));
  };
  for (std::size_t i = 0; i < L; ++i) {
    auto m = map_at(i);
    if (m.rows() != G.rank(i) || m.cols() != F.rank(i))
      throw std::invalid_argument("phi_" + std::to_string(i) + " is " + std::to_string(m.rows()) + "x" +
                                  std::to_string(m.cols()) + ", expected " + std::to_string(G.rank(i)) + "x" +
                                  std::to_string(F.rank(i)));
    if (rank(m) != F.rank(i)) return CheckResult::fail("phi_" + std::to_string(i) + " is not injective");
    auto tf = F.twists(i), tg = G.twists(i);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_zero() && tg[r] != tf[c])
          return CheckResult::fail("phi_" + std::to_string(i) + " joins generators of different twists");
  }
  for (std::size_t i = 1; i < L; ++i) {
    auto lhs = constant_matrix(map_at(i - 1), nvars) * F.d(i);
    auto rhs = G.d(i) * constant_matrix(map_at(i), nvars);
    if (!(lhs == rhs)) return CheckResult::fail("square at position " + std::to_string(i) + " does not commute");
  }
  return {};
}

template <Field K>
bool is_subcomplex(const GradedFreeComplex<K>& F, const GradedFreeComplex<K>& G, const ComplexInclusion<K>& phi) {
  return check_subcomplex(F, G, phi).ok;
}

/// Substitutes images[i] for x_{i+1} in every differential. Twists are
/// rescaled by the common degree of the nonzero images when there is one;
/// otherwise they are re-derived column by column from the substituted
/// entries. Throws when no consistent grading exists.
template <Field K>
GradedFreeComplex<K> specialize(const GradedFreeComplex<K>& C, const std::vector<Poly<K>>& images) {
  if (static_cast<int>(images.size()) != C.nvars())
    throw std::invalid_argument("substitution needs one image per variable");
  if (images.empty() && C.length() > 0) return C;
  const int target = images.empty() ? 0 : images.front().nvars();
  std::optional<int> delta;
  bool uniform = true;
  for (const auto& f : images) {
    if (f.nvars() != target) throw std::invalid_argument("substitution images live in different rings");
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw std::invalid_argument("substitution image is not homogeneous");
    if (!delta) delta = *f.degree();
    else if (*delta != *f.degree()) uniform = false;
  }
  std::vector<PolyMatrix<K>> diffs;
  for (const auto& d : C.diffs()) diffs.push_back(d.map([&](const Poly<K>& p) { return p.substitute(images); }, Poly<K>(target)));
  auto twists = C.all_twists();
  const int scale = uniform ? delta.value_or(1) : 1;
  if (!twists.empty())
    for (auto& t : twists[0]) t *= scale;
  for (std::size_t i = 1; i < twists.size(); ++i) {
    const auto& prev = twists[i - 1];
    std::vector<std::optional<int>> derived(twists[i].size());
    for (const auto& [idx, p] : diffs[i - 1].entries()) {
      if (!p.is_homogeneous()) throw std::invalid_argument("substitution produces a non-homogeneous entry");
      int t = prev[idx.first] - *p.degree();
      auto& slot = derived[idx.second];
      if (slot && *slot != t) throw std::invalid_argument("substitution is incompatible with the twists");
      slot = t;
    }
    for (std::size_t c = 0; c < twists[i].size(); ++c) {
      if (derived[c]) twists[i][c] = *derived[c];
      else if (uniform) twists[i][c] *= scale;
      else throw std::invalid_argument("cannot grade a column that specializes to zero under mixed-degree images");
    }
  }
  GradedFreeComplex<K> out(target, std::move(twists), std::move(diffs));
  if (auto chk = check_complex(out); !chk.ok) throw std::invalid_argument("specialization is not graded: " + chk.reason);
  return out;
}

/// Entries agree after flipping the sign of some columns.
template <Field K>
bool equal_up_to_column_sign(const PolyMatrix<K>& a, const PolyMatrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    bool same = true, flipped = true;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      const auto& x = a.at(r, c);
      const auto& y = b.at(r, c);
      if (!(x == y)) same = false;
      if (!(x == -y)) flipped = false;
    }
    if (!same && !flipped) return false;
  }
  return true;
}

/// One signed permutation per position: basis vector c of A maps to
/// sign[c] * (basis vector target[c] of B).
struct SignedPermutation {
  std::vector<std::size_t> target;
  std::vector<int> sign;
};

/// Finds signed permutations P_i (P_0 = identity) with P_{i-1} d^A_i = d^B_i P_i
/// and matching twists, position by position.
template <Field K>
std::optional<std::vector<SignedPermutation>> match_up_to_signed_permutation(const GradedFreeComplex<K>& A,
                                                                              const GradedFreeComplex<K>& B) {
  if (A.length() != B.length() || A.nvars() != B.nvars()) return std::nullopt;
  std::vector<SignedPermutation> perms;
  for (std::size_t i = 0; i < A.length(); ++i)
    if (A.rank(i) != B.rank(i)) return std::nullopt;
  if (A.length() == 0) return perms;
  SignedPermutation id;
  for (std::size_t c = 0; c < A.rank(0); ++c) {
    id.target.push_back(c);
    id.sign.push_back(1);
  }
  if (A.twists(0) != B.twists(0)) return std::nullopt;
  perms.push_back(id);
  for (std::size_t i = 1; i < A.length(); ++i) {
    const auto& prev = perms.back();
    auto da = A.d(i), db = B.d(i);
    const std::size_t n = A.rank(i);
    auto ta = A.twists(i), tb = B.twists(i);
    // candidates[c] = list of (c', sign) where P_{i-1} * colA_c == sign * colB_c'
    std::vector<std::vector<std::pair<std::size_t, int>>> cand(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Poly<K>> moved(A.rank(i - 1), Poly<K>(A.nvars()));
      for (std::size_t r = 0; r < A.rank(i - 1); ++r) {
        const auto& e = da.at(r, c);
        moved[prev.target[r]] = prev.sign[r] > 0 ? e : -e;
      }
      for (std::size_t c2 = 0; c2 < n; ++c2) {
        if (ta[c] != tb[c2]) continue;
        bool plus = true, minus = true;
        for (std::size_t r = 0; r < A.rank(i - 1) && (plus || minus); ++r) {
          const auto& e = db.at(r, c2);
          if (!(moved[r] == e)) plus = false;
          if (!(moved[r] == -e)) minus = false;
        }
        if (plus) cand[c].push_back({c2, 1});
        else if (minus) cand[c].push_back({c2, -1});
      }
    }
    // Bipartite matching by augmenting paths.
    std::vector<long> owner(n, -1);
    std::vector<int> owner_sign(n, 1);
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<bool> seen(n, false);
      auto augment = [&](auto&& self, std::size_t u) -> bool {
        for (auto [v, s] : cand[u]) {
          if (seen[v]) continue;
          seen[v] = true;
          if (owner[v] < 0 || self(self, static_cast<std::size_t>(owner[v]))) {
            owner[v] = static_cast<long>(u);
            owner_sign[v] = s;
            return true;
          }
        }
        return false;
      };
      if (!augment(augment, c)) return std::nullopt;
    }
    SignedPermutation p{std::vector<std::size_t>(n), std::vector<int>(n)};
    for (std::size_t v = 0; v < n; ++v) {
      p.target[owner[v]] = v;
      p.sign[owner[v]] = owner_sign[v];
    }
    perms.push_back(std::move(p));
  }
  return perms;
}

/// Keeps positions [first, length), renumbered from 0.
template <Field K>
GradedFreeComplex<K> drop_leading_positions(const GradedFreeComplex<K>& C, std::size_t first) {
  if (first >= C.length()) return GradedFreeComplex<K>(C.nvars(), {}, {});
  std::vector<std::vector<int>> twists(C.all_twists().begin() + first, C.all_twists().end());
  std::vector<PolyMatrix<K>> diffs(C.diffs().begin() + first, C.diffs().end());
  return GradedFreeComplex<K>(C.nvars(), std::move(twists), std::move(diffs));
}

}  // namespace subcx
