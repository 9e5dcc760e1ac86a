#pragma once

// Eagon-Northcott complex of a p x q matrix A (p <= q) with entries of one
// common degree delta. Position 0 is Lambda^p G (rank 1); position k+1 is
// (Sym_k G)^* (x) Lambda^{p+k} F with twist -(p+k) delta, basis ordered
// Sym-major: exponent vectors of degree k in grevlex, then column subsets in
// colex. d_1 is the row of maximal minors; for k >= 1
//   d_{k+1}(u (x) s) = sum_i (-1)^{i-1} sum_j A_{j,s_i} (u - unit_j) (x) (s \ s_i),
// where terms with a negative exponent are dropped.

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "subcx/complexes/complex.hpp"

namespace subcx {

namespace detail {

// All size-r subsets of {0..q-1} as bitmasks; numeric order is colex order.
inline std::vector<std::uint32_t> colex_subsets(int q, int r) {
  std::vector<std::uint32_t> out;
  if (r < 0 || r > q) return out;
  for (std::uint32_t s = 0; s < (1u << q); ++s)
    if (std::popcount(s) == r) out.push_back(s);
  return out;
}

inline std::vector<int> bits_of(std::uint32_t s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

template <Field K>
Poly<K> determinant(const std::vector<std::vector<Poly<K>>>& m, int nvars) {
  const std::size_t n = m.size();
  if (n == 0) return Poly<K>::constant(nvars, K(1));
  if (n == 1) return m[0][0];
  Poly<K> det(nvars);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Poly<K>>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly<K>> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    auto term = m[0][c] * determinant(minor, nvars);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

}  // namespace detail

/// The d x (n+d-1) banded matrix whose row i carries x_1..x_n in columns i..i+n-1.
template <Field K>
PolyMatrix<K> matrix_Mnd(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("M^{n,d} needs n, d >= 1");
  PolyMatrix<K> M(d, n + d - 1, Poly<K>(n));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < n; ++j) M.set(i, i + j, Poly<K>::variable(n, j));
  return M;
}

/// Common degree of the nonzero entries (1 when the matrix is zero).
template <Field K>
int uniform_entry_degree(const PolyMatrix<K>& A) {
  std::optional<int> delta;
  for (const auto& [idx, p] : A.entries()) {
    if (!p.is_homogeneous())
      throw std::invalid_argument("entry (" + std::to_string(idx.first) + "," + std::to_string(idx.second) +
                                  ") is not homogeneous");
    if (!delta) delta = *p.degree();
    else if (*delta != *p.degree())
      throw std::invalid_argument("Eagon-Northcott input must have entries of one common degree");
  }
  return delta.value_or(1);
}

template <Field K>
GradedFreeComplex<K> eagon_northcott(const PolyMatrix<K>& A) {
  const int p = static_cast<int>(A.rows());
  const int q = static_cast<int>(A.cols());
  const int nvars = A.zero().nvars();
  if (p < 1 || p > q) throw std::invalid_argument("Eagon-Northcott needs 1 <= rows <= cols");
  if (q > 20) throw std::invalid_argument("Eagon-Northcott input too wide");
  const int delta = uniform_entry_degree(A);

  struct Label {
    Monomial sym;
    std::uint32_t subset;
  };
  std::vector<std::vector<Label>> basis(q - p + 2);
  std::vector<std::map<std::pair<Monomial, std::uint32_t>, std::size_t>> lookup(q - p + 2);
  basis[0].push_back({Monomial(p, 0), 0});
  for (int k = 0; k <= q - p; ++k)
    for (const auto& u : monomials_of_degree(p, k))
      for (auto s : detail::colex_subsets(q, p + k)) {
        lookup[k + 1][{u, s}] = basis[k + 1].size();
        basis[k + 1].push_back({u, s});
      }

  std::vector<std::vector<int>> twists(q - p + 2);
  twists[0] = {0};
  for (int k = 0; k <= q - p; ++k) twists[k + 1].assign(basis[k + 1].size(), -(p + k) * delta);

  std::vector<PolyMatrix<K>> diffs;
  PolyMatrix<K> d1(1, basis[1].size(), Poly<K>(nvars));
  for (std::size_t c = 0; c < basis[1].size(); ++c) {
    auto cols = detail::bits_of(basis[1][c].subset);
    std::vector<std::vector<Poly<K>>> m(p);
    for (int r = 0; r < p; ++r)
      for (int col : cols) m[r].push_back(A.at(r, col));
    d1.set(0, c, detail::determinant(m, nvars));
  }
  diffs.push_back(std::move(d1));

  for (int k = 1; k <= q - p; ++k) {
    PolyMatrix<K> D(basis[k].size(), basis[k + 1].size(), Poly<K>(nvars));
    for (std::size_t c = 0; c < basis[k + 1].size(); ++c) {
      const auto& [u, s] = basis[k + 1][c];
      auto cols = detail::bits_of(s);
      for (std::size_t i = 0; i < cols.size(); ++i) {
        std::uint32_t rest = s & ~(1u << cols[i]);
        for (int j = 0; j < p; ++j) {
          if (u[j] == 0) continue;
          const auto& a = A.at(j, cols[i]);
          if (a.is_zero()) continue;
          Monomial v = u;
          --v[j];
          std::size_t r = lookup[k].at({v, rest});
          D.add(r, c, i % 2 == 0 ? a : -a);
        }
      }
    }
    diffs.push_back(std::move(D));
  }
  return GradedFreeComplex<K>(nvars, std::move(twists), std::move(diffs));
}

/// L_{n,d}: EN(M^{n,d}) without its rank-one position 0, renumbered from 0.
template <Field K>
GradedFreeComplex<K> linear_strand_Lnd(int n, int d) {
  return drop_leading_positions(eagon_northcott(matrix_Mnd<K>(n, d)), 1);
}

}  // namespace subcx
