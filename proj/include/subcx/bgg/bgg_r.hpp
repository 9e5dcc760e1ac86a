#pragma once

// The functor R on a finite degree window of a graded S-module: the piece M_t
// becomes E(-t)^{dim M_t} and  1 (x) g -> sum_i e_i (x) g x_i  maps the degree-t
// term to the degree-(t+1) term.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "subcx/algebra/poly.hpp"
#include "subcx/exterior/algebra.hpp"
#include "subcx/algebra/linalg.hpp"

namespace subcx {

/// Degrees first_degree .. first_degree + dims.size() - 1 of an S-module;
/// action[i][k] is the matrix of x_{i+1} : M_{first+k} -> M_{first+k+1}.
template <Field K>
struct SModuleWindow {
  int n = 0;
  int first_degree = 0;
  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix<K>>> action;
};

/// Window of I/J for monomial ideals I, J: the basis in degree t is the set of
/// degree-t monomials divisible by a generator of I and by none of J, in
/// grevlex order. An empty `ideal` means I = S.
template <Field K>
SModuleWindow<K> monomial_window(int n, const std::vector<Monomial>& ideal, const std::vector<Monomial>& quotient,
                                 int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty degree window");
  auto divides = [](const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  auto in_basis = [&](const Monomial& m) {
    bool in_i = ideal.empty() || std::any_of(ideal.begin(), ideal.end(), [&](const Monomial& g) { return divides(g, m); });
    bool in_j = std::any_of(quotient.begin(), quotient.end(), [&](const Monomial& g) { return divides(g, m); });
    return in_i && !in_j;
  };
  for (const auto& g : ideal)
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("monomial has the wrong number of variables");
  for (const auto& g : quotient)
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("monomial has the wrong number of variables");
  std::vector<std::vector<Monomial>> basis;
  for (int t = lo; t <= hi; ++t) {
    std::vector<Monomial> b;
    for (auto& m : monomials_of_degree(n, t))
      if (in_basis(m)) b.push_back(m);
    basis.push_back(std::move(b));
  }
  SModuleWindow<K> w{n, lo, {}, std::vector<std::vector<Matrix<K>>>(n)};
  for (const auto& b : basis) w.dims.push_back(b.size());
  for (int i = 0; i < n; ++i)
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) {
      Matrix<K> m(basis[k + 1].size(), basis[k].size());
      for (std::size_t c = 0; c < basis[k].size(); ++c) {
        Monomial up = basis[k][c];
        ++up[i];
        auto it = std::find(basis[k + 1].begin(), basis[k + 1].end(), up);
        if (it != basis[k + 1].end()) m(static_cast<std::size_t>(it - basis[k + 1].begin()), c) = K(1);
      }
      w.action[i].push_back(std::move(m));
    }
  return w;
}

/// A windowed complex of free E-modules: term j is E(twist_j)^{rank_j} for
/// degree first_degree + j; diffs[j] maps term j to term j+1.
template <Field K>
struct ExtFreeWindow {
  int n = 0;
  int first_degree = 0;
  std::vector<std::size_t> ranks;
  std::vector<int> twists;
  std::vector<ExtMatrix<K>> diffs;
};

template <Field K>
ExtFreeWindow<K> bgg_R(const SModuleWindow<K>& M) {
  if (M.dims.size() < 3) throw std::invalid_argument("R needs a window of at least three degrees to form a composite");
  ExtFreeWindow<K> out{M.n, M.first_degree, M.dims, {}, {}};
  for (std::size_t k = 0; k < M.dims.size(); ++k) out.twists.push_back(-(M.first_degree + static_cast<int>(k)));
  for (std::size_t k = 0; k + 1 < M.dims.size(); ++k) {
    ExtMatrix<K> D(M.dims[k + 1], M.dims[k], ExtElement<K>(M.n));
    for (int i = 0; i < M.n; ++i) {
      const auto& a = M.action[i][k];
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
          if (!a(r, c).is_zero()) D.add(r, c, a(r, c) * ExtElement<K>::generator(M.n, i + 1));
    }
    out.diffs.push_back(std::move(D));
  }
  return out;
}

/// Composites inside the window vanish.
template <Field K>
bool window_is_complex(const ExtFreeWindow<K>& W) {
  for (std::size_t j = 0; j + 1 < W.diffs.size(); ++j)
    if (!(W.diffs[j + 1] * W.diffs[j]).is_zero()) return false;
  return true;
}

}  // namespace subcx
