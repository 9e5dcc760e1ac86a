#pragma once

// Homogeneous ideals of E, held as graded subspaces of E (a Submodule of the
// free module E), and the annihilator (0 : I) computed degreewise.

#include <stdexcept>
#include <vector>

#include "subcx/exterior/module.hpp"

namespace subcx {

inline constexpr int kMaxColonVariables = 6;

/// Coordinates of a homogeneous element of E in the lex basis of its degree.
template <Field K>
ModuleElement<K> ext_coords(const ExtElement<K>& x) {
  auto size = x.homogeneous_size();
  if (!size) throw std::invalid_argument("ideal generators must be nonzero and homogeneous");
  ExteriorBasis basis(x.n());
  ModuleElement<K> v{-*size, std::vector<K>(basis.dim(*size), K(0))};
  for (const auto& [s, c] : x.terms()) v.coords[basis.index(s)] += c;
  return v;
}

template <Field K>
ExtElement<K> ext_from_coords(int n, int size, const std::vector<K>& coords) {
  ExteriorBasis basis(n);
  ExtElement<K> x(n);
  for (std::size_t t = 0; t < coords.size(); ++t) x.add(ExtMonomial{basis.of_size(size)[t]}, coords[t]);
  return x;
}

/// The ideal generated by homogeneous elements (zero elements are ignored).
template <Field K>
Submodule<K> ideal_generated(int n, const std::vector<ExtElement<K>>& gens) {
  std::vector<ModuleElement<K>> elems;
  for (const auto& g : gens) {
    if (g.n() != n) throw std::invalid_argument("generator lives in a different exterior algebra");
    if (!g.is_zero()) elems.push_back(ext_coords(g));
  }
  return submodule_generated(exterior_algebra<K>(n), elems);
}

/// Basis of I as exterior elements, all degrees.
template <Field K>
std::vector<ExtElement<K>> ideal_basis(int n, const Submodule<K>& I) {
  std::vector<ExtElement<K>> out;
  for (std::size_t k = 0; k < I.spaces.size(); ++k)
    for (const auto& v : I.spaces[k].basis()) out.push_back(ext_from_coords<K>(n, static_cast<int>(k), v));
  return out;
}

/// Minimal homogeneous generators: in each degree, a complement of what the
/// higher degrees already generate.
template <Field K>
std::vector<ExtElement<K>> ideal_generators(int n, const Submodule<K>& I) {
  std::vector<ExtElement<K>> out;
  auto E = exterior_algebra<K>(n);
  for (std::size_t k = 0; k < I.spaces.size(); ++k) {
    std::vector<std::vector<K>> reached;
    if (k > 0)
      for (int i = 0; i < n; ++i)
        for (const auto& b : I.spaces[k - 1].basis()) reached.push_back(E.action()[i][k - 1].apply(b));
    auto have = Subspace<K>::span(I.spaces[k].ambient(), reached);
    for (const auto& v : I.spaces[k].basis()) {
      if (have.contains(v)) continue;
      out.push_back(ext_from_coords<K>(n, static_cast<int>(k), v));
      reached.push_back(v);
      have = Subspace<K>::span(I.spaces[k].ambient(), reached);
    }
  }
  return out;
}

/// (0 : I) = {a in E : a b = 0 for all b in I}, as a graded subspace of E.
template <Field K>
Submodule<K> colon_zero(int n, const Submodule<K>& I) {
  if (n > kMaxColonVariables)
    throw std::invalid_argument("colon ideals are limited to n <= " + std::to_string(kMaxColonVariables));
  auto E = exterior_algebra<K>(n);
  ExteriorBasis basis(n);
  auto ib = ideal_basis(n, I);
  std::vector<Subspace<K>> spaces(n + 1);
  for (int s = 0; s <= n; ++s) {
    std::size_t dim = basis.dim(s);
    // Stack the coordinates of a*b over all basis elements b of I.
    std::vector<std::vector<K>> cols;
    for (std::size_t t = 0; t < dim; ++t) {
      auto a = ExtElement<K>(n);
      a.add(ExtMonomial{basis.of_size(s)[t]}, K(1));
      std::vector<K> col;
      for (const auto& b : ib) {
        auto prod = a * b;
        int target = s + *b.homogeneous_size();
        if (target > n) continue;
        std::vector<K> coords(basis.dim(target), K(0));
        for (const auto& [m, c] : prod.terms()) coords[basis.index(m)] += c;
        col.insert(col.end(), coords.begin(), coords.end());
      }
      cols.push_back(std::move(col));
    }
    std::size_t rows = cols.empty() ? 0 : cols.front().size();
    auto ker = kernel_basis(Matrix<K>::from_columns(rows, cols));
    std::vector<std::vector<K>> vecs;
    for (std::size_t c = 0; c < ker.cols(); ++c) vecs.push_back(ker.column(c));
    spaces[s] = Subspace<K>::span(dim, vecs);
  }
  return detail::restrict_to(E, std::move(spaces));
}

template <Field K>
Submodule<K> colon_zero(int n, const std::vector<ExtElement<K>>& gens) {
  return colon_zero(n, ideal_generated(n, gens));
}

}  // namespace subcx
