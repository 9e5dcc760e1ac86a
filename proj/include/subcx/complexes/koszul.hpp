#pragma once

// Koszul complexes K(f_1..f_m). Position d has basis e_T for the size-d
// subsets T of {1..m} in lex order, generator twist -sum_{j in T} deg f_j, and
//   d(e_T) = sum_{j=1}^{d} s_j f_{i_j} e_{T \ i_j},   T = {i_1 < ... < i_d}.
// With the default sign s_j = (-1)^{j-1} the n = 3 matrices come out as
//   [x1 x2 x3],  [[-x2,-x3,0],[x1,0,-x3],[0,x1,x2]],  [x3,-x2,x1]^T.
// KoszulSign::minus_first uses s_j = (-1)^j instead, which negates every
// column of every differential.

#include <stdexcept>
#include <vector>

#include "subcx/complexes/complex.hpp"
#include "subcx/exterior/algebra.hpp"

namespace subcx {

enum class KoszulSign { plus_first, minus_first };

template <Field K>
GradedFreeComplex<K> koszul_general(int nvars, const std::vector<Poly<K>>& f,
                                    KoszulSign convention = KoszulSign::plus_first) {
  const int m = static_cast<int>(f.size());
  std::vector<int> deg(m);
  for (int j = 0; j < m; ++j) {
    if (f[j].nvars() != nvars) throw std::invalid_argument("Koszul form in the wrong ring");
    if (f[j].is_zero() || !f[j].is_homogeneous())
      throw std::invalid_argument("Koszul forms must be nonzero and homogeneous (form " + std::to_string(j + 1) + ")");
    deg[j] = *f[j].degree();
  }
  ExteriorBasis basis(m);
  std::vector<std::vector<int>> twists(m + 1);
  for (int d = 0; d <= m; ++d)
    for (auto T : basis.of_size(d)) {
      int t = 0;
      for (int i : ExtMonomial{T}.indices()) t -= deg[i - 1];
      twists[d].push_back(t);
    }
  std::vector<PolyMatrix<K>> diffs;
  for (int d = 1; d <= m; ++d) {
    PolyMatrix<K> D(basis.dim(d - 1), basis.dim(d), Poly<K>(nvars));
    const auto& cols = basis.of_size(d);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      auto idx = ExtMonomial{cols[c]}.indices();
      for (std::size_t j = 0; j < idx.size(); ++j) {  // j is 0-based here
        bool negative = (j % 2 == 1) != (convention == KoszulSign::minus_first);
        std::uint32_t rest = cols[c] & ~(1u << (idx[j] - 1));
        const auto& fj = f[idx[j] - 1];
        D.set(basis.index(rest), c, negative ? -fj : fj);
      }
    }
    diffs.push_back(std::move(D));
  }
  return GradedFreeComplex<K>(nvars, std::move(twists), std::move(diffs));
}

/// K(x_1..x_n).
template <Field K>
GradedFreeComplex<K> koszul(int n, KoszulSign convention = KoszulSign::plus_first) {
  std::vector<Poly<K>> vars;
  for (int i = 0; i < n; ++i) vars.push_back(Poly<K>::variable(n, i));
  return koszul_general<K>(n, vars, convention);
}

}  // namespace subcx
