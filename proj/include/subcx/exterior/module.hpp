#pragma once

// Finitely generated graded modules over E, stored degreewise: a dimension per
// internal degree plus the matrix of right multiplication by each e_i.
//
// Degree conventions:
//   * piece k of a module sits in internal degree top() - k;
//   * twisting follows N(i)_d = N_{i+d}, so twist(i) lowers every degree by i;
//   * hilbert_function reads h_j = dim N_{origin - j}, j = 0..n, where the
//     origin is declared metadata that twisting leaves alone.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subcx/algebra/linalg.hpp"
#include "subcx/core/sequence.hpp"
#include "subcx/exterior/algebra.hpp"

namespace subcx {

/// A homogeneous element: a degree and coordinates in that degree's basis.
template <Field K>
struct ModuleElement {
  int degree = 0;
  std::vector<K> coords;
};

template <Field K>
class ExtModule {
 public:
  ExtModule() = default;
  /// action[i][k] is the dims[k+1] x dims[k] matrix of v -> v e_{i+1} on piece k.
  /// Throws if the matrices are mis-sized or violate e_i^2 = 0 / anticommutation.
  ExtModule(int n, int top, int origin, std::vector<std::size_t> dims, std::vector<std::vector<Matrix<K>>> action)
      : n_(n), top_(top), origin_(origin), dims_(std::move(dims)), action_(std::move(action)) {
    normalize();
    validate();
  }

  static ExtModule zero(int n, int origin = 0) {
    return ExtModule(n, origin, origin, {}, std::vector<std::vector<Matrix<K>>>(n));
  }

  int n() const { return n_; }
  int top() const { return top_; }
  int origin() const { return origin_; }
  /// Lowest occupied degree (== top() + 1 for the zero module).
  int bottom() const { return top_ - static_cast<int>(dims_.size()) + 1; }
  std::size_t pieces() const { return dims_.size(); }
  const std::vector<std::size_t>& piece_dims() const { return dims_; }
  std::size_t total_dim() const {
    std::size_t t = 0;
    for (auto d : dims_) t += d;
    return t;
  }
  bool is_zero() const { return dims_.empty(); }

  std::size_t dim_at(int degree) const {
    auto k = piece_of(degree);
    return k ? dims_[*k] : 0;
  }
  std::optional<std::size_t> piece_of(int degree) const {
    long k = static_cast<long>(top_) - degree;
    if (k < 0 || k >= static_cast<long>(dims_.size())) return std::nullopt;
    return static_cast<std::size_t>(k);
  }

  /// Right multiplication by e_{i} (1-based) from `degree` to `degree - 1`.
  Matrix<K> action_at(int i, int degree) const {
    if (i < 1 || i > n_) throw std::out_of_range("exterior generator index out of range");
    auto k = piece_of(degree);
    if (!k) return Matrix<K>(dim_at(degree - 1), 0);
    return action_[i - 1][*k];
  }
  const std::vector<std::vector<Matrix<K>>>& action() const { return action_; }

  ModuleElement<K> act(const ModuleElement<K>& v, int i) const {
    auto m = action_at(i, v.degree);
    if (m.cols() != v.coords.size()) throw std::invalid_argument("element has wrong length for its degree");
    return {v.degree - 1, m.apply(v.coords)};
  }

  /// N(i): same data, every degree lowered by i.
  ExtModule twist(int i) const {
    ExtModule t = *this;
    t.top_ -= i;
    return t;
  }
  ExtModule with_origin(int origin) const {
    ExtModule t = *this;
    t.origin_ = origin;
    return t;
  }

  /// Same module over another field (exact for integer structure constants).
  template <Field L>
  ExtModule<L> change_field() const
    requires std::same_as<K, Rational>
  {
    std::vector<std::vector<Matrix<L>>> act(action_.size());
    for (std::size_t i = 0; i < action_.size(); ++i)
      for (const auto& m : action_[i]) {
        Matrix<L> r(m.rows(), m.cols());
        for (std::size_t a = 0; a < m.rows(); ++a)
          for (std::size_t b = 0; b < m.cols(); ++b) r(a, b) = L::from_rational(m(a, b));
        act[i].push_back(std::move(r));
      }
    return ExtModule<L>(n_, top_, origin_, dims_, std::move(act));
  }

  /// h_j = dim N_{origin - j} for j = 0..n.
  HilbertFunction hilbert_function() const {
    std::vector<int> h(n_ + 1, 0);
    for (int j = 0; j <= n_; ++j) h[j] = static_cast<int>(dim_at(origin_ - j));
    return HilbertFunction(std::move(h));
  }

 private:
  void normalize() {
    if (static_cast<int>(action_.size()) != n_)
      throw std::invalid_argument("module needs one action list per exterior generator");
    // Strip zero pieces at both ends so top() is the highest occupied degree.
    std::size_t lead = 0;
    while (lead < dims_.size() && dims_[lead] == 0) ++lead;
    std::size_t end = dims_.size();
    while (end > lead && dims_[end - 1] == 0) --end;
    for (auto& per_gen : action_) {
      if (per_gen.size() < dims_.size())
        per_gen.resize(dims_.size());
    }
    if (lead == 0 && end == dims_.size()) {
      fix_last_piece();
      return;
    }
    std::vector<std::size_t> dims(dims_.begin() + lead, dims_.begin() + end);
    for (auto& per_gen : action_) per_gen = std::vector<Matrix<K>>(per_gen.begin() + lead, per_gen.begin() + end);
    top_ -= static_cast<int>(lead);
    dims_ = std::move(dims);
    fix_last_piece();
  }
  // The last piece maps into the (absent) next degree: force 0-row matrices.
  void fix_last_piece() {
    if (dims_.empty()) {
      for (auto& per_gen : action_) per_gen.clear();
      return;
    }
    for (auto& per_gen : action_) {
      per_gen.resize(dims_.size());
      per_gen.back() = Matrix<K>(0, dims_.back());
    }
  }

  void validate() const {
    for (int i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < dims_.size(); ++k) {
        std::size_t next = k + 1 < dims_.size() ? dims_[k + 1] : 0;
        const auto& m = action_[i][k];
        if (m.rows() != next || m.cols() != dims_[k])
          throw std::invalid_argument("action matrix of e" + std::to_string(i + 1) + " on piece " +
                                      std::to_string(k) + " has the wrong shape");
      }
    for (std::size_t k = 0; k + 2 < dims_.size() + 1 && k + 1 < dims_.size(); ++k)
      for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) {
          Matrix<K> ij = action_[j][k + 1] * action_[i][k];
          if (i == j) {
            if (!ij.is_zero()) throw std::invalid_argument("action violates e_i^2 = 0");
            continue;
          }
          Matrix<K> ji = action_[i][k + 1] * action_[j][k];
          for (std::size_t r = 0; r < ij.rows(); ++r)
            for (std::size_t c = 0; c < ij.cols(); ++c)
              if (!(ij(r, c) + ji(r, c)).is_zero()) throw std::invalid_argument("action violates e_i e_j = -e_j e_i");
        }
  }

  int n_ = 0;
  int top_ = 0;
  int origin_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<Matrix<K>>> action_;

 public:
  /// Same presentation: degrees, origin and every action matrix.
  friend bool operator==(const ExtModule&, const ExtModule&) = default;
};

/// A free module sum_j E * g_j with g_j in degree gen_degrees[j]. Basis of
/// each degree: pairs (j, monomial) ordered by j, then lex monomial order.
template <Field K>
class FreeExtModule {
 public:
  FreeExtModule(int n, std::vector<int> gen_degrees, int origin = 0)
      : basis_(n), gen_degrees_(std::move(gen_degrees)) {
    if (gen_degrees_.empty()) {
      module_ = ExtModule<K>::zero(n, origin);
      return;
    }
    int top = *std::max_element(gen_degrees_.begin(), gen_degrees_.end());
    int bottom = *std::min_element(gen_degrees_.begin(), gen_degrees_.end()) - n;
    std::size_t pieces = static_cast<std::size_t>(top - bottom + 1);
    labels_.assign(pieces, {});
    for (std::size_t j = 0; j < gen_degrees_.size(); ++j)
      for (int s = 0; s <= n; ++s)
        for (auto m : basis_.of_size(s)) labels_[top - (gen_degrees_[j] - s)].push_back({j, m});
    for (auto& lab : labels_)
      std::stable_sort(lab.begin(), lab.end(), [&](const Label& a, const Label& b) {
        if (a.gen != b.gen) return a.gen < b.gen;
        return basis_.index(a.mono) < basis_.index(b.mono);
      });
    std::vector<std::size_t> dims(pieces);
    for (std::size_t k = 0; k < pieces; ++k) dims[k] = labels_[k].size();
    std::vector<std::vector<Matrix<K>>> action(n, std::vector<Matrix<K>>(pieces));
    for (int i = 1; i <= n; ++i)
      for (std::size_t k = 0; k < pieces; ++k) {
        std::size_t next = k + 1 < pieces ? dims[k + 1] : 0;
        Matrix<K> m(next, dims[k]);
        for (std::size_t c = 0; c < dims[k]; ++c) {
          const auto& lab = labels_[k][c];
          if (auto prod = ext_mul(ExtMonomial{lab.mono}, ExtMonomial{1u << (i - 1)})) {
            std::size_t r = position(k + 1, lab.gen, prod->monomial.support);
            m(r, c) = K(prod->sign);
          }
        }
        action[i - 1][k] = std::move(m);
      }
    top_ = top;
    module_ = ExtModule<K>(n, top, origin, std::move(dims), std::move(action));
  }

  const ExtModule<K>& module() const { return module_; }
  const std::vector<int>& gen_degrees() const { return gen_degrees_; }

  /// The element g_j * x as a homogeneous module element.
  ModuleElement<K> element(std::size_t j, const ExtElement<K>& x) const {
    if (j >= gen_degrees_.size()) throw std::out_of_range("generator index out of range");
    auto size = x.homogeneous_size();
    if (!size) {
      if (x.is_zero()) throw std::invalid_argument("zero element has no degree");
      throw std::invalid_argument("inhomogeneous exterior element");
    }
    int degree = gen_degrees_[j] - *size;
    std::size_t k = static_cast<std::size_t>(top_ - degree);
    ModuleElement<K> v{degree, std::vector<K>(labels_[k].size(), K(0))};
    for (const auto& [s, c] : x.terms()) v.coords[position(k, j, s)] += c;
    return v;
  }

  /// Sum of g_j * column[j]; every summand must land in the same degree.
  std::optional<ModuleElement<K>> combination(const std::vector<ExtElement<K>>& column) const {
    std::optional<ModuleElement<K>> acc;
    for (std::size_t j = 0; j < column.size(); ++j) {
      if (column[j].is_zero()) continue;
      auto v = element(j, column[j]);
      if (!acc) acc = std::move(v);
      else {
        if (acc->degree != v.degree) throw std::invalid_argument("non-homogeneous presentation column");
        for (std::size_t t = 0; t < v.coords.size(); ++t) acc->coords[t] += v.coords[t];
      }
    }
    return acc;
  }

 private:
  struct Label {
    std::size_t gen;
    std::uint32_t mono;
  };
  std::size_t position(std::size_t piece, std::size_t gen, std::uint32_t mono) const {
    const auto& lab = labels_.at(piece);
    for (std::size_t t = 0; t < lab.size(); ++t)
      if (lab[t].gen == gen && lab[t].mono == mono) return t;
    throw std::logic_error("basis label not found");
  }

  ExteriorBasis basis_;
  std::vector<int> gen_degrees_;
  std::vector<std::vector<Label>> labels_;
  int top_ = 0;
  ExtModule<K> module_;
};

/// E itself: one generator in degree 0, Hilbert function (C(n,0), ..., C(n,n)).
template <Field K>
ExtModule<K> exterior_algebra(int n) {
  return FreeExtModule<K>(n, {0}).module();
}

/// A graded submodule together with its embedding: inclusion[k] has the
/// ambient basis coordinates of the submodule basis of the same degree as columns.
template <Field K>
struct Submodule {
  ExtModule<K> module;
  std::vector<Subspace<K>> spaces;  // per ambient piece
  int ambient_top = 0;

  Matrix<K> inclusion_at(int degree) const {
    long k = static_cast<long>(ambient_top) - degree;
    if (k < 0 || k >= static_cast<long>(spaces.size())) return Matrix<K>(0, 0);
    return spaces[k].rref_rows().transpose();
  }
};

namespace detail {

// Restrict the ambient action to e_i-stable subspaces (one per ambient piece).
template <Field K>
Submodule<K> restrict_to(const ExtModule<K>& ambient, std::vector<Subspace<K>> spaces) {
  const int n = ambient.n();
  const std::size_t pieces = ambient.pieces();
  std::vector<std::size_t> dims(pieces);
  for (std::size_t k = 0; k < pieces; ++k) dims[k] = spaces[k].dim();
  std::vector<std::vector<Matrix<K>>> action(n, std::vector<Matrix<K>>(pieces));
  for (int i = 0; i < n; ++i)
    for (std::size_t k = 0; k < pieces; ++k) {
      std::size_t next = k + 1 < pieces ? dims[k + 1] : 0;
      Matrix<K> m(next, dims[k]);
      if (k + 1 < pieces) {
        const auto& a = ambient.action()[i][k];
        const auto& target = spaces[k + 1];
        for (std::size_t c = 0; c < dims[k]; ++c) {
          auto img = a.apply(spaces[k].rref_rows().row(c));
          // Coordinates in an RREF basis are read off at the pivot columns.
          for (std::size_t r = 0; r < target.dim(); ++r) m(r, c) = img[target.pivots()[r]];
        }
      }
      action[i][k] = std::move(m);
    }
  Submodule<K> out;
  out.ambient_top = ambient.top();
  out.spaces = std::move(spaces);
  out.module = ExtModule<K>(n, ambient.top(), ambient.origin(), std::move(dims), std::move(action));
  return out;
}

}  // namespace detail

/// Smallest e_i-stable graded subspace of N containing the given homogeneous elements.
template <Field K>
Submodule<K> submodule_generated(const ExtModule<K>& N, const std::vector<ModuleElement<K>>& gens) {
  const std::size_t pieces = N.pieces();
  std::vector<std::vector<std::vector<K>>> seeds(pieces);
  for (const auto& g : gens) {
    auto k = N.piece_of(g.degree);
    if (!k) {
      bool zero = std::all_of(g.coords.begin(), g.coords.end(), [](const K& x) { return x.is_zero(); });
      if (zero) continue;
      throw std::invalid_argument("generator lies in a degree where the module is zero");
    }
    if (g.coords.size() != N.piece_dims()[*k])
      throw std::invalid_argument("generator is not an element of the module (wrong length)");
    seeds[*k].push_back(g.coords);
  }
  std::vector<Subspace<K>> spaces(pieces);
  for (std::size_t k = 0; k < pieces; ++k) {
    auto vecs = seeds[k];
    if (k > 0)
      for (int i = 0; i < N.n(); ++i)
        for (const auto& b : spaces[k - 1].basis()) vecs.push_back(N.action()[i][k - 1].apply(b));
    spaces[k] = Subspace<K>::span(N.piece_dims()[k], vecs);
  }
  return detail::restrict_to(N, std::move(spaces));
}

/// N / U for a submodule U; the quotient basis in each degree is the set of
/// standard vectors at the non-pivot coordinates of U's RREF.
template <Field K>
ExtModule<K> quotient(const ExtModule<K>& N, const Submodule<K>& U) {
  const std::size_t pieces = N.pieces();
  if (U.spaces.size() != pieces) throw std::invalid_argument("submodule does not belong to this module");
  std::vector<std::vector<std::size_t>> keep(pieces);
  std::vector<std::size_t> dims(pieces);
  for (std::size_t k = 0; k < pieces; ++k) {
    keep[k] = U.spaces[k].non_pivots();
    dims[k] = keep[k].size();
  }
  std::vector<std::vector<Matrix<K>>> action(N.n(), std::vector<Matrix<K>>(pieces));
  for (int i = 0; i < N.n(); ++i)
    for (std::size_t k = 0; k < pieces; ++k) {
      std::size_t next = k + 1 < pieces ? dims[k + 1] : 0;
      Matrix<K> m(next, dims[k]);
      if (k + 1 < pieces)
        for (std::size_t c = 0; c < dims[k]; ++c) {
          auto img = U.spaces[k + 1].reduce(N.action()[i][k].column(keep[k][c]));
          for (std::size_t r = 0; r < keep[k + 1].size(); ++r) m(r, c) = img[keep[k + 1][r]];
        }
      action[i][k] = std::move(m);
    }
  return ExtModule<K>(N.n(), N.top(), N.origin(), std::move(dims), std::move(action));
}

/// Cokernel of a matrix over E between free modules. Row j is a generator of
/// the target in degree row_degrees[j]; column k is a generator of the source
/// in degree col_degrees[k] and maps to sum_j g_j * P(j,k), so each nonzero
/// entry must be homogeneous of support size row_degrees[j] - col_degrees[k].
template <Field K>
ExtModule<K> module_from_cokernel(const ExtMatrix<K>& P, int n, const std::vector<int>& row_degrees,
                                  const std::vector<int>& col_degrees, int origin = 0) {
  if (P.rows() != row_degrees.size() || P.cols() != col_degrees.size())
    throw std::invalid_argument("presentation shape does not match the declared degrees");
  for (const auto& [idx, v] : P.entries()) {
    auto size = v.homogeneous_size();
    if (!size || *size != row_degrees[idx.first] - col_degrees[idx.second])
      throw std::invalid_argument("non-homogeneous presentation entry at (" + std::to_string(idx.first) + "," +
                                  std::to_string(idx.second) + ")");
  }
  FreeExtModule<K> F(n, row_degrees, origin);
  std::vector<ModuleElement<K>> relations;
  for (std::size_t c = 0; c < P.cols(); ++c) {
    std::vector<ExtElement<K>> column(P.rows(), ExtElement<K>(n));
    for (std::size_t r = 0; r < P.rows(); ++r) column[r] = P.at(r, c);
    if (auto rel = F.combination(column)) relations.push_back(std::move(*rel));
  }
  return quotient(F.module(), submodule_generated(F.module(), relations));
}

template <Field K>
HilbertFunction hilbert_function(const ExtModule<K>& N) {
  return N.hilbert_function();
}

}  // namespace subcx
