#pragma once

// Every Hilbert function realized by a graded submodule of a small module N
// over E = Lambda(F_p^n). A submodule is a choice of subspaces U_k of the
// pieces with U_k e_i contained in U_{k+1}; walking down the pieces, U_{k+1}
// must contain the span W of the images of U_k. The set of reachable tails
// depends only on (k, W), which is memoized.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "subcx/exterior/module.hpp"
#include "subcx/oracle/subcomplex_search.hpp"

namespace subcx {

inline constexpr std::size_t kMaxSubmoduleEnumerationDim = 12;

/// Hilbert functions (read from N's origin) of all graded submodules of N,
/// the zero submodule included.
template <FiniteField K>
std::set<HilbertFunction> enumerate_submodule_hfs(const ExtModule<K>& N,
                                                 std::size_t cap = kMaxSubmoduleEnumerationDim) {
  if (N.total_dim() > cap)
    throw BudgetExceeded(N.total_dim(), cap,
                         "module of total dimension " + std::to_string(N.total_dim()) +
                             " exceeds the enumeration cap " + std::to_string(cap));
  const std::size_t P = N.pieces();
  using Tails = std::set<std::vector<int>>;
  std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, Tails> memo;

  auto key_of = [](const Subspace<K>& W) {
    std::vector<std::uint32_t> key;
    const auto& m = W.rref_rows();
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b) key.push_back(m(a, b).value());
    return key;
  };

  auto rec = [&](auto&& self, std::size_t k, const Subspace<K>& W) -> Tails {
    if (k == P) return {{}};
    auto key = std::make_pair(k, key_of(W));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Tails out;
    const std::size_t dim = N.piece_dims()[k];
    for (std::size_t t = W.dim(); t <= dim; ++t)
      for_each_subspace_containing<K>(W, t, [&](const Subspace<K>& U) {
        std::vector<std::vector<K>> images;
        if (k + 1 < P)
          for (const auto& u : U.basis())
            for (int i = 0; i < N.n(); ++i) images.push_back(N.action()[i][k].apply(u));
        auto next = k + 1 < P ? Subspace<K>::span(N.piece_dims()[k + 1], images) : Subspace<K>(0);
        for (const auto& tail : self(self, k + 1, next)) {
          std::vector<int> v{static_cast<int>(U.dim())};
          v.insert(v.end(), tail.begin(), tail.end());
          out.insert(std::move(v));
        }
        return true;
      });
    memo.emplace(std::move(key), out);
    return out;
  };

  std::set<HilbertFunction> result;
  const auto tails = P == 0 ? Tails{{}} : rec(rec, 0, Subspace<K>(N.piece_dims()[0]));
  for (const auto& dims : tails) {
    std::vector<int> h(N.n() + 1, 0);
    for (int j = 0; j <= N.n(); ++j) {
      long k = static_cast<long>(N.top()) - (N.origin() - j);
      if (k >= 0 && k < static_cast<long>(dims.size())) h[j] = dims[k];
    }
    result.insert(HilbertFunction(std::move(h)));
  }
  return result;
}

}  // namespace subcx
