#pragma once

// Exhaustive search for a subcomplex of a complex G over F_p with prescribed
// rank sequence. For G with a single twist per position a subcomplex is a
// choice of subspaces V_i of the constant parts K^{rank G_i} with
// g_i(V_i) contained in S * V_{i-1}, i.e. for every monomial mu the
// coefficient matrix C_mu of g_i sends V_i into V_{i-1}.
//
// Search runs from the top position down. Once V_i is fixed, W = span of all
// C_mu v (v in V_i) must lie in V_{i-1}, so only the subspaces containing W
// are enumerated. Every subspace is produced once, by its echelon form.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subcx/complexes/complex.hpp"
#include "subcx/oracle/subspaces.hpp"

namespace subcx {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

struct BudgetExceeded : std::runtime_error {
  std::uint64_t required, budget;
  BudgetExceeded(std::uint64_t req, std::uint64_t bud)
      : std::runtime_error("search space " + std::to_string(req) + " exceeds budget " + std::to_string(bud)),
        required(req),
        budget(bud) {}
  BudgetExceeded(std::uint64_t req, std::uint64_t bud, const std::string& what)
      : std::runtime_error(what), required(req), budget(bud) {}
};

enum class SearchVerdict { found, exhausted };

inline std::string to_string(SearchVerdict v) { return v == SearchVerdict::found ? "found" : "exhausted"; }

struct SearchOptions {
  std::uint64_t budget = kDefaultSearchBudget;
  /// Keep going after the first hit and count every solution.
  bool count_all = false;
};

template <Field K>
struct SubcomplexWitness {
  GradedFreeComplex<K> sub;
  ComplexInclusion<K> inclusion;
};

template <Field K>
struct SearchReport {
  SearchVerdict verdict = SearchVerdict::exhausted;
  RankSequence target;
  std::string field;
  /// Product of Gaussian binomials over the positions: the unpruned search space.
  std::uint64_t search_space = 0;
  /// Subspaces examined across all levels.
  std::uint64_t candidates = 0;
  /// Complete solutions seen (1 when stopping at the first).
  std::uint64_t solutions = 0;
  std::optional<SubcomplexWitness<K>> witness;
};

namespace detail {

template <Field K>
std::map<Monomial, Matrix<K>, GrevlexDescending> coefficient_matrices(const PolyMatrix<K>& d) {
  std::map<Monomial, Matrix<K>, GrevlexDescending> out;
  for (const auto& [idx, p] : d.entries())
    for (const auto& [mono, c] : p.terms()) {
      auto it = out.find(mono);
      if (it == out.end()) it = out.emplace(mono, Matrix<K>(d.rows(), d.cols())).first;
      it->second(idx.first, idx.second) = c;
    }
  return out;
}

template <Field K>
Matrix<K> columns_of(const Subspace<K>& V) {
  return V.rref_rows().transpose();
}

}  // namespace detail

/// Throws BudgetExceeded when the unpruned space exceeds the budget and
/// std::invalid_argument when a position that must be split mixes twists.
template <FiniteField K>
SearchReport<K> subcomplex_search(const GradedFreeComplex<K>& G, const RankSequence& r, SearchOptions opt = {}) {
  SearchReport<K> rep;
  rep.target = r;
  rep.field = K::field_name();
  const std::size_t L = std::max(G.length(), r.size());
  for (std::size_t i = G.length(); i < r.size(); ++i)
    if (r[i] != 0) {
      rep.search_space = 0;
      return rep;  // asks for more positions than G has
    }
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < L; ++i) {
    const int want = i < r.size() ? r[i] : 0;
    if (want < 0) throw std::invalid_argument("rank sequences are non-negative");
    if (static_cast<std::size_t>(want) > G.rank(i)) return rep;
    if (want > 0 && static_cast<std::size_t>(want) < G.rank(i) && !G.uniform_twist(i))
      throw std::invalid_argument("position " + std::to_string(i) +
                                  " has mixed twists; the oracle only searches single-twist positions");
    space = saturating_mul(space, gaussian_binomial(static_cast<int>(G.rank(i)), want, K::modulus));
  }
  rep.search_space = space;
  if (space > opt.budget) throw BudgetExceeded(space, opt.budget);
  if (L == 0) {
    rep.verdict = SearchVerdict::found;
    rep.solutions = 1;
    rep.witness = SubcomplexWitness<K>{GradedFreeComplex<K>(G.nvars(), {}, {}), {}};
    return rep;
  }

  std::vector<std::map<Monomial, Matrix<K>, GrevlexDescending>> coeff(L);
  for (std::size_t i = 1; i < G.length(); ++i) coeff[i] = detail::coefficient_matrices(G.diffs()[i - 1]);

  std::vector<Subspace<K>> chosen(L, Subspace<K>(0));
  std::optional<std::vector<Subspace<K>>> first_hit;

  // Level i: V_i must contain W and have dimension r_i.
  auto rec = [&](auto&& self, std::size_t i, const Subspace<K>& W) -> bool {
    const std::size_t want = i < r.size() ? static_cast<std::size_t>(r[i]) : 0;
    return for_each_subspace_containing<K>(W, want, [&](const Subspace<K>& V) {
      ++rep.candidates;
      chosen[i] = V;
      if (i == 0) {
        ++rep.solutions;
        if (!first_hit) first_hit = chosen;
        return opt.count_all;
      }
      std::vector<std::vector<K>> images;
      for (const auto& v : V.basis())
        for (const auto& [mono, C] : coeff[i]) {
          auto w = C.apply(v);
          if (std::any_of(w.begin(), w.end(), [](const K& x) { return !x.is_zero(); })) images.push_back(std::move(w));
        }
      auto next = Subspace<K>::span(G.rank(i - 1), images);
      const std::size_t below = i - 1 < r.size() ? static_cast<std::size_t>(r[i - 1]) : 0;
      if (next.dim() > below) return true;  // pruned
      return self(self, i - 1, next);
    });
  };
  rec(rec, L - 1, Subspace<K>(G.rank(L - 1)));
  if (!first_hit) return rep;

  rep.verdict = SearchVerdict::found;
  // Induced differentials: f_i(c) solves phi_{i-1} y = C_mu v_c for each mu.
  const auto& V = *first_hit;
  ComplexInclusion<K> phi;
  std::vector<std::vector<int>> twists(L);
  for (std::size_t i = 0; i < L; ++i) {
    phi.maps.push_back(detail::columns_of(V[i]));
    auto tg = G.twists(i);
    for (auto p : V[i].pivots()) twists[i].push_back(tg[p]);
  }
  std::vector<PolyMatrix<K>> diffs;
  for (std::size_t i = 1; i < L; ++i) {
    PolyMatrix<K> f(V[i - 1].dim(), V[i].dim(), Poly<K>(G.nvars()));
    auto basis = V[i].basis();
    for (std::size_t c = 0; c < basis.size(); ++c)
      for (const auto& [mono, C] : coeff[i]) {
        auto y = solve_in_column_space(phi.maps[i - 1], C.apply(basis[c]));
        if (!y) throw std::logic_error("search accepted a subspace tuple that is not closed");
        for (std::size_t row = 0; row < y->size(); ++row)
          if (!(*y)[row].is_zero()) f.add(row, c, Poly<K>::monomial(mono, (*y)[row]));
      }
    diffs.push_back(std::move(f));
  }
  GradedFreeComplex<K> F(G.nvars(), std::move(twists), std::move(diffs));
  auto check = check_subcomplex(F, G, phi);
  if (!check) throw std::logic_error("induced subcomplex failed re-validation: " + check.reason);
  rep.witness = SubcomplexWitness<K>{std::move(F), std::move(phi)};
  return rep;
}

}  // namespace subcx
