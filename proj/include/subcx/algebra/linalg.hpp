#pragma once

// Exact Gaussian elimination: reduced row echelon form, rank, kernels,
// column-space membership, and a small Subspace helper built on RREF.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "subcx/algebra/matrix.hpp"

namespace subcx {

/// Dense elimination is used when both dimensions are at most this; larger
/// inputs go through row-sparse elimination.
inline constexpr std::size_t kDenseEliminationLimit = 200;

template <Field K>
struct Rref {
  Matrix<K> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, increasing
};

template <Field K>
Rref<K> rref(Matrix<K> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    K inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      K f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <Field K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).pivots.size();
}

namespace detail {

// Row-sparse forward elimination; returns the rank.
template <Field K>
std::size_t sparse_rank(const SparseMatrix<K>& s) {
  std::vector<std::map<std::size_t, K>> rows(s.rows());
  for (const auto& [idx, v] : s.entries()) rows[idx.first].emplace(idx.second, v);
  std::map<std::size_t, std::map<std::size_t, K>> pivot_rows;  // leading column -> normalized row
  for (auto& r : rows) {
    while (!r.empty()) {
      auto lead = r.begin()->first;
      auto it = pivot_rows.find(lead);
      if (it == pivot_rows.end()) {
        K inv = r.begin()->second.inverse();
        for (auto& [c, v] : r) v *= inv;
        pivot_rows.emplace(lead, std::move(r));
        break;
      }
      K f = r.begin()->second;
      for (const auto& [c, v] : it->second) {
        auto [pos, inserted] = r.try_emplace(c, K(0));
        pos->second -= f * v;
        if (pos->second.is_zero()) r.erase(pos);
      }
    }
  }
  return pivot_rows.size();
}

}  // namespace detail

/// Rank by exact elimination; dense below kDenseEliminationLimit, sparse above.
template <Field K>
std::size_t matrix_rank(const SparseMatrix<K>& s, std::size_t dense_limit = kDenseEliminationLimit) {
  if (s.rows() <= dense_limit && s.cols() <= dense_limit) return rank(to_dense(s));
  return detail::sparse_rank(s);
}

/// Basis of the right kernel {x : Mx = 0}, returned as the columns of a matrix.
template <Field K>
Matrix<K> kernel_basis(const Matrix<K>& m) {
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(m.cols(), K(0));
    v[free] = K(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, free);
    basis.push_back(std::move(v));
  }
  return Matrix<K>::from_columns(m.cols(), basis);
}

/// Some x with Mx = v, or nullopt when v is not in the column space of M.
template <Field K>
std::optional<std::vector<K>> solve_in_column_space(const Matrix<K>& m, const std::vector<K>& v) {
  if (v.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  Matrix<K> aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = v[r];
  }
  auto [red, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<K> x(m.cols(), K(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = red(r, m.cols());
  return x;
}

template <Field K>
std::optional<std::vector<K>> solve_in_column_space(const SparseMatrix<K>& m, const std::vector<K>& v) {
  return solve_in_column_space(to_dense(m), v);
}

/// A linear subspace of K^dim, stored as the nonzero rows of its RREF.
template <Field K>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<std::vector<K>>& vectors) {
    Matrix<K> m(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient) throw std::invalid_argument("span: vector length mismatch");
      for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
    }
    return from_rows(m);
  }
  /// Row space of m.
  static Subspace from_rows(const Matrix<K>& m) {
    auto [red, pivots] = rref(m);
    Subspace s(m.cols());
    s.pivots_ = pivots;
    s.basis_ = Matrix<K>(pivots.size(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) s.basis_(r, c) = red(r, c);
    return s;
  }
  static Subspace whole(std::size_t ambient) { return from_rows(Matrix<K>::identity(ambient)); }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  const Matrix<K>& rref_rows() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::vector<K>> basis() const {
    std::vector<std::vector<K>> out;
    for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
    return out;
  }

  /// v minus its projection along the RREF rows; zero iff v lies in the subspace.
  std::vector<K> reduce(std::vector<K> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("reduce: vector length mismatch");
    for (std::size_t r = 0; r < dim(); ++r) {
      K f = v[pivots_[r]];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < ambient_; ++c) v[c] -= f * basis_(r, c);
    }
    return v;
  }
  bool contains(const std::vector<K>& v) const {
    auto red = reduce(v);
    return std::all_of(red.begin(), red.end(), [](const K& x) { return x.is_zero(); });
  }
  bool contains(const Subspace& o) const {
    for (std::size_t r = 0; r < o.dim(); ++r)
      if (!contains(o.basis_.row(r))) return false;
    return true;
  }
  /// Coordinates not used as pivots; the standard vectors there span a complement.
  std::vector<std::size_t> non_pivots() const {
    std::vector<bool> p(ambient_, false);
    for (auto x : pivots_) p[x] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ambient_; ++i)
      if (!p[i]) out.push_back(i);
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix<K> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace subcx
