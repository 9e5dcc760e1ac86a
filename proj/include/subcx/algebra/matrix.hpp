#pragma once

// Matrices: a dense row-major Matrix<K> used by the elimination kernels, and a
// SparseMatrix<T> (map of nonzero entries) used for differentials whose
// entries are polynomials or exterior elements.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subcx/algebra/field.hpp"

namespace subcx {

template <Field K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}
  Matrix(std::initializer_list<std::initializer_list<K>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<K>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<K> column(std::size_t c) const {
    std::vector<K> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  std::vector<K> row(std::size_t r) const {
    return std::vector<K>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<K> out(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> data_;
};

/// Sparse matrix over any ring-like T with an `is_zero()` predicate. The zero
/// prototype supplies the value returned for absent entries (polynomials need
/// to know their variable count).
template <class T>
class SparseMatrix {
 public:
  using Index = std::pair<std::size_t, std::size_t>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols, T zero = T{})
      : rows_(rows), cols_(cols), zero_(std::move(zero)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& zero() const { return zero_; }
  const std::map<Index, T>& entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  const T& at(std::size_t r, std::size_t c) const {
    check(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? zero_ : it->second;
  }

  void set(std::size_t r, std::size_t c, T v) {
    check(r, c);
    if (v.is_zero()) entries_.erase({r, c});
    else entries_.insert_or_assign(Index{r, c}, std::move(v));
  }

  void add(std::size_t r, std::size_t c, const T& v) {
    check(r, c);
    if (v.is_zero()) return;
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
      entries_.emplace(Index{r, c}, v);
      return;
    }
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_, zero_);
    for (const auto& [idx, v] : entries_) t.entries_.emplace(Index{idx.second, idx.first}, v);
    return t;
  }

  /// Applies f to every stored entry; zero results are dropped.
  template <class F>
  auto map(F&& f, decltype(f(std::declval<const T&>())) new_zero) const {
    using U = decltype(f(std::declval<const T&>()));
    SparseMatrix<U> out(rows_, cols_, std::move(new_zero));
    for (const auto& [idx, v] : entries_) out.set(idx.first, idx.second, f(v));
    return out;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("sparse product dimension mismatch (" + std::to_string(a.cols_) + " vs " +
                                  std::to_string(b.rows_) + ")");
    // Row-bucket b for the inner loop.
    std::vector<std::vector<std::pair<std::size_t, const T*>>> brows(b.rows_);
    for (const auto& [idx, v] : b.entries_) brows[idx.first].emplace_back(idx.second, &v);
    SparseMatrix p(a.rows_, b.cols_, a.zero_);
    for (const auto& [idx, av] : a.entries_)
      for (const auto& [col, bv] : brows[idx.second]) p.add(idx.first, col, av * *bv);
    return p;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
      throw std::out_of_range("entry (" + std::to_string(r) + "," + std::to_string(c) + ") outside " +
                              std::to_string(rows_) + "x" + std::to_string(cols_));
  }

  std::size_t rows_ = 0, cols_ = 0;
  T zero_{};
  std::map<Index, T> entries_;
};

template <Field K>
SparseMatrix<K> to_sparse(const Matrix<K>& m) {
  SparseMatrix<K> s(m.rows(), m.cols(), K(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s.set(r, c, m(r, c));
  return s;
}

template <Field K>
Matrix<K> to_dense(const SparseMatrix<K>& s) {
  Matrix<K> m(s.rows(), s.cols());
  for (const auto& [idx, v] : s.entries()) m(idx.first, idx.second) = v;
  return m;
}

}  // namespace subcx
