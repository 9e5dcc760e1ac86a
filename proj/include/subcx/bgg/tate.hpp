#pragma once

// Differentials of the Tate resolution of K over E and the modules N_{n,d}.
//
// cartan_differential(s, n): rows are the degree-(s-1) monomials in x_1..x_n,
// columns the degree-s monomials, both in grevlex with x_1 > ... > x_n; the
// entry is e_k when column = x_k * row and 0 otherwise. The map from the
// projective to the injective side, [e_1 ... e_n] (the socle), is s = 0.

#include <optional>
#include <stdexcept>
#include <vector>

#include "subcx/algebra/poly.hpp"
#include "subcx/exterior/module.hpp"

namespace subcx {

template <Field K>
ExtMatrix<K> cartan_differential(int s, int n, std::optional<int> ambient = std::nullopt) {
  const int amb = ambient.value_or(n);
  if (n < 1 || amb < n) throw std::invalid_argument("Cartan differential needs 1 <= n <= ambient");
  if (s < 0) throw std::invalid_argument("Cartan differential needs s >= 0");
  if (s == 0) {
    ExtMatrix<K> M(1, 1, ExtElement<K>(amb));
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    M.set(0, 0, ExtElement<K>::monomial(amb, all));
    return M;
  }
  auto rows = monomials_of_degree(n, s - 1);
  auto cols = monomials_of_degree(n, s);
  ExtMatrix<K> M(rows.size(), cols.size(), ExtElement<K>(amb));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int k = 0; k < n; ++k) {
      Monomial up = rows[r];
      ++up[k];
      auto it = std::lower_bound(cols.begin(), cols.end(), up, GrevlexDescending{});
      M.set(r, static_cast<std::size_t>(it - cols.begin()), ExtElement<K>::generator(amb, k + 1));
    }
  return M;
}

/// Consecutive Cartan differentials d_s .. d_{s_last} with their twists.
template <Field K>
struct TateWindow {
  int n = 0;
  int s_first = 0;
  std::vector<ExtMatrix<K>> diffs;  // diffs[j] is d_{s_first + j}
};

template <Field K>
TateWindow<K> tate_window(int n, int s_first, int s_last) {
  if (s_first < 0 || s_last < s_first) throw std::invalid_argument("empty Tate window");
  TateWindow<K> w{n, s_first, {}};
  for (int s = s_first; s <= s_last; ++s) w.diffs.push_back(cartan_differential<K>(s, n));
  return w;
}

/// Composites d_s d_{s+1} vanish over E.
template <Field K>
bool tate_window_is_complex(const TateWindow<K>& w) {
  for (std::size_t j = 0; j + 1 < w.diffs.size(); ++j) {
    if (w.diffs[j].cols() != w.diffs[j + 1].rows()) return false;
    if (!(w.diffs[j] * w.diffs[j + 1]).is_zero()) return false;
  }
  return true;
}

/// N_{n,d} = coker d_{d-1}^T, with generators (the degree-(d-1) monomials)
/// placed in internal degree d and the Hilbert-function origin there too.
/// With ambient > n the same presentation is read over K<e_1..e_ambient>.
template <Field K>
ExtModule<K> tate_Nnd(int n, int d, std::optional<int> ambient = std::nullopt) {
  if (n < 1 || d < 1) throw std::invalid_argument("N_{n,d} needs n, d >= 1");
  const int amb = ambient.value_or(n);
  auto P = cartan_differential<K>(d - 1, n, amb).transpose();
  const int source_degree = d == 1 ? 1 - n : d - 1;
  std::vector<int> rows(P.rows(), d), cols(P.cols(), source_degree);
  return module_from_cokernel(P, amb, rows, cols, d);
}

/// E_(m) = E / <e_{m+1}, ..., e_n>, generated in degree 0.
template <Field K>
ExtModule<K> exterior_quotient(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("E_(m) needs 0 <= m <= n");
  ExtMatrix<K> P(1, n - m, ExtElement<K>(n));
  for (int i = m + 1; i <= n; ++i) P.set(0, i - m - 1, ExtElement<K>::generator(n, i));
  return module_from_cokernel(P, n, {0}, std::vector<int>(n - m, -1), 0);
}

}  // namespace subcx
