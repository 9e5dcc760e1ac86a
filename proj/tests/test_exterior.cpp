#include <catch_amalgamated.hpp>

#include "subcx/exterior/ideal.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace subcx;
using Q = Rational;
using F2 = GF<2>;

namespace {

// Sign of the permutation sorting the concatenation a ++ b, or 0 on a repeat.
int brute_sign(std::vector<int> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] == seq[j]) return 0;
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = 0; j + 1 < seq.size() - i; ++j)
      if (seq[j] > seq[j + 1]) {
        std::swap(seq[j], seq[j + 1]);
        sign = -sign;
      }
  return sign;
}

// dim of the degree -k piece of the ideal generated by gens, from all products gens * monomials
template <Field K>
std::vector<int> brute_ideal_hf(int n, const std::vector<ExtElement<K>>& gens) {
  ExteriorBasis basis(n);
  std::vector<int> h(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    std::vector<std::vector<K>> vecs;
    for (const auto& g : gens)
      for (std::uint32_t s = 0; s < (1u << n); ++s) {
        auto prod = g * ExtElement<K>::monomial(n, ExtMonomial{s}.indices());
        if (prod.is_zero() || *prod.homogeneous_size() != k) continue;
        vecs.push_back(ext_coords(prod).coords);
      }
    h[k] = static_cast<int>(Subspace<K>::span(basis.dim(k), vecs).dim());
  }
  return h;
}

}  // namespace

TEST_CASE("monomial products carry the sign of the sorting permutation") {
  const int n = 5;
  for (std::uint32_t a = 0; a < (1u << n); ++a)
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
      auto ia = ExtMonomial{a}.indices(), ib = ExtMonomial{b}.indices();
      std::vector<int> cat = ia;
      cat.insert(cat.end(), ib.begin(), ib.end());
      auto r = ext_mul(ExtMonomial{a}, ExtMonomial{b});
      const int want = brute_sign(cat);
      if (want == 0) {
        CHECK_FALSE(r);
      } else {
        REQUIRE(r);
        CHECK(r->sign == want);
        CHECK(r->monomial.support == (a | b));
      }
    }
}

TEST_CASE("exterior algebra relations") {
  const int n = 4;
  for (int i = 1; i <= n; ++i) {
    auto ei = ExtElement<Q>::generator(n, i);
    CHECK((ei * ei).is_zero());
    for (int j = 1; j <= n; ++j) {
      auto ej = ExtElement<Q>::generator(n, j);
      CHECK(ei * ej == -(ej * ei));
    }
  }
  testing::Rng g(testing::kSeed);
  for (int t = 0; t < 30; ++t) {
    auto a = testing::random_ext<Q>(g, n, g.uniform(0, 2));
    auto b = testing::random_ext<Q>(g, n, g.uniform(0, 2));
    auto c = testing::random_ext<Q>(g, n, g.uniform(0, 2));
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) * c == a * c + b * c);
    if (!a.is_zero() && !b.is_zero()) {
      const int sa = *a.homogeneous_size(), sb = *b.homogeneous_size();
      CHECK(a * b == Q((sa * sb) % 2 ? -1 : 1) * (b * a));
    }
  }
}

TEST_CASE("exterior elements print and order their basis lexicographically") {
  auto x = ExtElement<Q>::monomial(3, {1, 3}) + Q(-2) * ExtElement<Q>::generator(3, 2);
  CHECK(x.to_string().find("1/1*e1*e3") != std::string::npos);
  ExteriorBasis basis(4);
  std::vector<std::vector<int>> deg2;
  for (auto s : basis.of_size(2)) deg2.push_back(ExtMonomial{s}.indices());
  CHECK(deg2 == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(basis.dim(2) == 6);
  CHECK(basis.dim(5) == 0);
}

TEST_CASE("the ideal <e1, e2e3> has the listed bases and Hilbert function") {
  auto I = testing::ideal_e1_e2e3<Q>();
  CHECK(I.module.hilbert_function() == HilbertFunction{0, 1, 4, 4, 1});
  std::vector<std::string> deg2;
  for (const auto& b : ideal_basis(4, I))
    if (*b.homogeneous_size() == 2) deg2.push_back(b.to_string());
  CHECK(deg2 == std::vector<std::string>{"1/1*e1*e2", "1/1*e1*e3", "1/1*e1*e4", "1/1*e2*e3"});
  CHECK(ideal_generators(4, I).size() == 2);
}

TEST_CASE("ideal Hilbert functions match products with every monomial") {
  testing::Rng g(testing::kSeed + 1);
  for (int t = 0; t < 25; ++t) {
    const int n = g.uniform(2, 4);
    std::vector<ExtElement<Q>> gens;
    for (int k = g.uniform(1, 3); k > 0; --k) {
      auto x = testing::random_ext<Q>(g, n, g.uniform(0, n));
      if (!x.is_zero()) gens.push_back(x);
    }
    auto I = ideal_generated<Q>(n, gens);
    CHECK(I.module.hilbert_function() == HilbertFunction(brute_ideal_hf(n, gens)));
  }
}

TEST_CASE("annihilators agree with exhaustive search over GF(2)") {
  testing::Rng g(testing::kSeed + 2);
  for (int t = 0; t < 15; ++t) {
    const int n = g.uniform(2, 4);
    std::vector<ExtElement<F2>> gens;
    for (int k = g.uniform(1, 2); k > 0; --k) {
      auto x = testing::random_ext<F2>(g, n, g.uniform(1, n));
      if (!x.is_zero()) gens.push_back(x);
    }
    if (gens.empty()) continue;
    auto ann = colon_zero<F2>(n, gens);
    ExteriorBasis basis(n);
    for (int k = 0; k <= n; ++k) {
      const auto dim = basis.dim(k);
      std::size_t killers = 0;
      for (std::uint32_t v = 0; v < (1u << dim); ++v) {
        std::vector<F2> coords(dim);
        for (std::size_t c = 0; c < dim; ++c) coords[c] = F2((v >> c) & 1u);
        auto a = ext_from_coords<F2>(n, k, coords);
        bool kills = true;
        for (const auto& gen : gens)
          for (std::uint32_t s = 0; s < (1u << n) && kills; ++s)
            kills = (a * gen * ExtElement<F2>::monomial(n, ExtMonomial{s}.indices())).is_zero();
        if (kills) ++killers;
      }
      CHECK(killers == (std::size_t{1} << ann.module.dim_at(-k)));
    }
  }
}

TEST_CASE("quotients and free modules") {
  auto E = exterior_algebra<Q>(3);
  CHECK(E.hilbert_function() == HilbertFunction{1, 3, 3, 1});
  auto I = ideal_generated<Q>(3, {ExtElement<Q>::generator(3, 1)});
  auto quot = quotient(E, I);
  CHECK(quot.hilbert_function() == HilbertFunction{1, 2, 1, 0});
  ExtMatrix<Q> P(1, 1, ExtElement<Q>(3));
  P.set(0, 0, ExtElement<Q>::generator(3, 1));
  CHECK(module_from_cokernel(P, 3, {0}, {-1}).hilbert_function() == quot.hilbert_function());
  CHECK_THROWS_AS(module_from_cokernel(P, 3, {0}, {-2}), std::invalid_argument);
  FreeExtModule<Q> F(2, {0, -1});
  CHECK(F.module().hilbert_function() == HilbertFunction{1, 3, 3});
  CHECK(F.module().total_dim() == 8);
}

TEST_CASE("twisting moves degrees but not the Hilbert-function origin") {
  auto E = exterior_algebra<Q>(2);
  auto T = E.twist(1);
  CHECK(T.top() == E.top() - 1);
  CHECK(T.dim_at(-1) == 1);
  CHECK(T.hilbert_function() == HilbertFunction{0, 1, 2});
  CHECK(T.with_origin(-1).hilbert_function() == E.hilbert_function());
}

TEST_CASE("module actions must satisfy the exterior relations") {
  // one piece of dim 1 mapping to dim 1 by e1 and e2 equally: e1 e2 + e2 e1 = 2 != 0
  std::vector<std::vector<Matrix<Q>>> act(2);
  for (int i = 0; i < 2; ++i) act[i] = {Matrix<Q>{{Q(1)}}, Matrix<Q>{{Q(1)}}, Matrix<Q>(0, 1)};
  CHECK_THROWS_AS(ExtModule<Q>(2, 0, 0, {1, 1, 1}, act), std::invalid_argument);
  std::vector<std::vector<Matrix<Q>>> bad_shape(1);
  bad_shape[0] = {Matrix<Q>(2, 1)};
  CHECK_THROWS_AS(ExtModule<Q>(1, 0, 0, {1, 1}, bad_shape), std::invalid_argument);
}

TEST_CASE("submodules generated by elements of a free module") {
  FreeExtModule<Q> F(3, {0, 0});
  auto U = submodule_generated(F.module(), {F.element(0, ExtElement<Q>::generator(3, 1)),
                                            F.element(1, ExtElement<Q>::generator(3, 1))});
  CHECK(U.module.hilbert_function() == HilbertFunction{0, 2, 4, 2});
  const auto inc = U.inclusion_at(-1);
  CHECK(inc.rows() == 6);
  CHECK(inc.cols() == 2);
  CHECK(rank(inc) == 2);
}
