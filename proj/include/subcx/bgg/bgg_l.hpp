#pragma once

// The functor L from graded E-modules to linear free complexes over
// S = K[x_1..x_n]: the piece N_x becomes S(-x)^{dim N_x} and
//   1 (x) f  ->  sum_i x_i (x) f e_i   maps the degree-x term to the degree-(x-1) term.
// Placement: the term of degree x sits at position x - base. By default the
// base is the lowest occupied degree of N, so that position 0 is nonzero;
// pass the ambient module's base to line a submodule up with it.

#include <optional>
#include <stdexcept>

#include "subcx/complexes/complex.hpp"
#include "subcx/exterior/module.hpp"

namespace subcx {

template <Field K>
GradedFreeComplex<K> bgg_L(const ExtModule<K>& N, std::optional<int> base_degree = std::nullopt) {
  const int n = N.n();
  if (N.is_zero()) return GradedFreeComplex<K>(n, {}, {});
  const int base = base_degree.value_or(N.bottom());
  if (base > N.bottom())
    throw std::invalid_argument("base degree " + std::to_string(base) + " lies above occupied degree " +
                                std::to_string(N.bottom()));
  const int len = N.top() - base + 1;
  std::vector<std::vector<int>> twists(len);
  for (int pos = 0; pos < len; ++pos) twists[pos].assign(N.dim_at(base + pos), -(base + pos));
  std::vector<PolyMatrix<K>> diffs;
  for (int pos = 1; pos < len; ++pos) {
    const int x = base + pos;
    PolyMatrix<K> D(N.dim_at(x - 1), N.dim_at(x), Poly<K>(n));
    if (N.dim_at(x) > 0 && N.dim_at(x - 1) > 0)
      for (int i = 1; i <= n; ++i) {
        auto a = N.action_at(i, x);
        for (std::size_t r = 0; r < a.rows(); ++r)
          for (std::size_t c = 0; c < a.cols(); ++c)
            if (!a(r, c).is_zero()) D.add(r, c, Poly<K>::variable(n, i - 1) * a(r, c));
      }
    diffs.push_back(std::move(D));
  }
  return GradedFreeComplex<K>(n, std::move(twists), std::move(diffs));
}

/// Placement by the Hilbert-function dictionary h_i = r_{n-i}: the degree
/// (origin - i) piece goes to position n - i.
template <Field K>
GradedFreeComplex<K> bgg_L_from_origin(const ExtModule<K>& N) {
  return bgg_L(N, N.origin() - N.n());
}

/// The constant inclusion L(U) -> L(N) induced by a submodule, with both
/// complexes placed from the same base degree.
template <Field K>
ComplexInclusion<K> bgg_L_inclusion(const Submodule<K>& U, int base_degree) {
  ComplexInclusion<K> phi;
  const int top = U.ambient_top;
  for (int x = base_degree; x <= top; ++x) {
    auto m = U.inclusion_at(x);
    if (m.rows() == 0 && m.cols() == 0) {
      // degree outside the ambient module: both terms vanish
      phi.maps.emplace_back(0, 0);
      continue;
    }
    phi.maps.push_back(std::move(m));
  }
  return phi;
}

}  // namespace subcx
