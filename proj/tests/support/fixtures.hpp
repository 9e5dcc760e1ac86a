#pragma once

// Small worked objects shared by several suites.

#include <string>
#include <vector>

#include "subcx/algebra/poly_text.hpp"
#include "subcx/complexes/eagon_northcott.hpp"
#include "subcx/exterior/ideal.hpp"

namespace subcx::testing {

template <Field K>
PolyMatrix<K> poly_matrix(const std::vector<std::vector<std::string>>& rows, int nvars) {
  PolyMatrix<K> m(rows.size(), rows.empty() ? 0 : rows[0].size(), Poly<K>(nvars));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, parse_poly<K>(rows[r][c], nvars));
  return m;
}

/// The ideal <e1, e2e3> of the exterior algebra on four generators.
template <Field K>
Submodule<K> ideal_e1_e2e3() {
  return ideal_generated<K>(4, {ExtElement<K>::generator(4, 1), ExtElement<K>::monomial(4, {2, 3})});
}

/// Eagon-Northcott complex of [[x, y, z], [y, z, w]] over k[x,y,z,w] = k[x1..x4].
template <Field K>
GradedFreeComplex<K> en_generic_2x3() {
  return eagon_northcott(poly_matrix<K>({{"x1", "x2", "x3"}, {"x2", "x3", "x4"}}, 4));
}

/// Its image under x, w -> 0: the Eagon-Northcott complex of [[0, y, z], [y, z, 0]].
template <Field K>
GradedFreeComplex<K> en_specialized_2x3() {
  return eagon_northcott(poly_matrix<K>({{"0", "x2", "x3"}, {"x2", "x3", "0"}}, 4));
}

template <Field K>
std::vector<Poly<K>> kill_x_and_w() {
  return {Poly<K>(4), Poly<K>::variable(4, 1), Poly<K>::variable(4, 2), Poly<K>(4)};
}

}  // namespace subcx::testing
