#include <catch_amalgamated.hpp>

#include <algorithm>
#include <bit>
#include <set>
#include <numeric>

#include "subcx/complexes/koszul.hpp"
#include "subcx/core/binomial.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace subcx;
using Q = Rational;
using testing::poly_matrix;

namespace {

// Determinant by the permutation expansion.
Poly<Q> brute_det(const std::vector<std::vector<Poly<Q>>>& m, int nvars) {
  const std::size_t k = m.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Poly<Q> total(nvars);
  do {
    int inv = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) ++inv;
    Poly<Q> term = Poly<Q>::constant(nvars, Q(inv % 2 ? -1 : 1));
    for (std::size_t r = 0; r < k; ++r) term = term * m[r][perm[r]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::size_t count_monomials(int nvars, int deg) {
  std::size_t c = 0;
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars - 1) {
      ++c;
      return;
    }
    for (int a = 0; a <= left; ++a) self(self, i + 1, left - a);
  };
  if (nvars == 0) return deg == 0 ? 1 : 0;
  rec(rec, 0, deg);
  return c;
}

}  // namespace

TEST_CASE("Koszul complex on three variables matches the worked display") {
  auto K = koszul<Q>(3);
  CHECK(K.rank_sequence() == RankSequence{1, 3, 3, 1});
  CHECK(K.all_twists() == std::vector<std::vector<int>>{{0}, {-1, -1, -1}, {-2, -2, -2}, {-3}});
  CHECK(K.d(1) == poly_matrix<Q>({{"x1", "x2", "x3"}}, 3));
  CHECK(K.d(2) == poly_matrix<Q>({{"-x2", "-x3", "0"}, {"x1", "0", "-x3"}, {"0", "x1", "x2"}}, 3));
  CHECK(K.d(3) == poly_matrix<Q>({{"x3"}, {"-x2"}, {"x1"}}, 3));
}

TEST_CASE("Koszul complexes are complexes and both sign conventions agree up to signed permutation") {
  for (int n = 0; n <= 6; ++n) {
    auto K = koszul<Q>(n);
    CHECK(verify_complex(K));
    for (int i = 0; i <= n; ++i) CHECK(K.rank(i) == static_cast<std::size_t>(binomial(n, i)));
    CHECK(match_up_to_signed_permutation(K, koszul<Q>(n, KoszulSign::minus_first)));
  }
}

TEST_CASE("Koszul complexes on forms carry the degree sums as twists") {
  std::vector<Poly<Q>> f{parse_poly<Q>("x1^2", 3), parse_poly<Q>("x2*x3", 3), parse_poly<Q>("x3^3", 3)};
  auto K = koszul_general<Q>(3, f);
  CHECK(verify_complex(K));
  CHECK(K.all_twists() == std::vector<std::vector<int>>{{0}, {-2, -2, -3}, {-4, -5, -5}, {-7}});
  CHECK(specialize(koszul<Q>(3), f) == K);
}

TEST_CASE("Eagon-Northcott complex of the banded 2x4 matrix") {
  auto A = matrix_Mnd<Q>(3, 2);
  CHECK(A == poly_matrix<Q>({{"x1", "x2", "x3", "0"}, {"0", "x1", "x2", "x3"}}, 3));
  auto G = eagon_northcott(A);
  CHECK(verify_complex(G));
  std::vector<std::pair<std::size_t, int>> terms;
  for (std::size_t i = 0; i < G.length(); ++i) terms.emplace_back(G.rank(i), *G.uniform_twist(i));
  CHECK(terms == std::vector<std::pair<std::size_t, int>>{{1, 0}, {6, -2}, {8, -3}, {3, -4}});
}

TEST_CASE("Eagon-Northcott ranks and first differential agree with direct counts and minors") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; n + d <= 6; ++d) {
      auto A = matrix_Mnd<Q>(n, d);
      auto G = eagon_northcott(A);
      const int p = d, q = n + d - 1;
      REQUIRE(G.length() == static_cast<std::size_t>(q - p + 2));
      for (int k = 0; k <= q - p; ++k)
        CHECK(G.rank(k + 1) == count_monomials(p, k) * static_cast<std::size_t>(binomial(q, p + k)));
      // d_1 lists the maximal minors up to sign, one per column subset
      std::multiset<std::string> want, got;
      for (std::uint32_t s = 0; s < (1u << q); ++s) {
        if (std::popcount(s) != p) continue;
        std::vector<std::vector<Poly<Q>>> sub(p);
        for (int r = 0; r < p; ++r)
          for (int c = 0; c < q; ++c)
            if (s >> c & 1u) sub[r].push_back(A.at(r, c));
        auto m = brute_det(sub, n);
        auto neg = -m;
        want.insert(std::min(format_poly(m), format_poly(neg)));
      }
      auto d1 = G.d(1);
      for (std::size_t c = 0; c < d1.cols(); ++c) {
        auto m = d1.at(0, c);
        auto neg = -m;
        got.insert(std::min(format_poly(m), format_poly(neg)));
      }
      CHECK(got == want);
    }
}

TEST_CASE("linear strand of the 3x6 matrix has the stated ranks") {
  auto L = linear_strand_Lnd<Q>(4, 3);
  CHECK(L.rank_sequence() == RankSequence{20, 45, 36, 10});
  CHECK(verify_complex(L));
  CHECK(linear_strand_Lnd<Q>(3, 2).rank_sequence() == RankSequence{6, 8, 3});
}

TEST_CASE("generic 2x3 Eagon-Northcott complex and its specialization") {
  auto Fp = testing::en_generic_2x3<Q>();
  auto F = testing::en_specialized_2x3<Q>();
  CHECK(verify_complex(Fp));
  CHECK(verify_complex(F));
  CHECK(Fp.d(1) == poly_matrix<Q>({{"-x2^2 + x1*x3", "-x2*x3 + x1*x4", "-x3^2 + x2*x4"}}, 4));
  CHECK(F.d(1) == poly_matrix<Q>({{"-x2^2", "-x2*x3", "-x3^2"}}, 4));
  CHECK(equal_up_to_column_sign(F.d(2), poly_matrix<Q>({{"-x3", "0"}, {"x2", "x3"}, {"0", "-x2"}}, 4)));
  CHECK(specialize(Fp, testing::kill_x_and_w<Q>()) == F);
  // the displayed second map of the generic complex does not compose to zero with d_1
  auto shown = poly_matrix<Q>({{"-x3", "-x4"}, {"x2", "x3"}, {"x1", "-x2"}}, 4);
  CHECK_FALSE((Fp.d(1) * shown).is_zero());
}

TEST_CASE("the subcomplex with ranks (1,2,1) inside the specialization") {
  auto F = testing::en_specialized_2x3<Q>();
  GradedFreeComplex<Q> G(4, {{0}, {-2, -2}, {-3}},
                         {poly_matrix<Q>({{"-x2^2", "-x2*x3"}}, 4), poly_matrix<Q>({{"-x3"}, {"x2"}}, 4)});
  CHECK(verify_complex(G));
  // F's second map is the negative of the displayed one, so the inclusion negates the last generator
  ComplexInclusion<Q> phi{{Matrix<Q>{{Q(1)}}, Matrix<Q>{{Q(1), Q(0)}, {Q(0), Q(1)}, {Q(0), Q(0)}},
                           Matrix<Q>{{Q(-1)}, {Q(0)}}}};
  CHECK(check_subcomplex(G, F, phi).ok);
  // its lift with the generic first map is not a complex inclusion into the generic complex
  GradedFreeComplex<Q> Gp(4, {{0}, {-2, -2}, {-3}},
                          {poly_matrix<Q>({{"-x2^2 + x1*x3", "-x2*x3 + x1*x4"}}, 4), poly_matrix<Q>({{"-x3"}, {"x2"}}, 4)});
  CHECK_FALSE(verify_complex(Gp));
}

TEST_CASE("subcomplex checks reject each kind of failure") {
  auto K = koszul<Q>(2);
  GradedFreeComplex<Q> K1(2, {{0}, {-1}}, {poly_matrix<Q>({{"x1"}}, 2)});
  Matrix<Q> e1{{Q(1)}, {Q(0)}};
  ComplexInclusion<Q> good{{Matrix<Q>{{Q(1)}}, e1}};
  CHECK(check_subcomplex(K1, K, good).ok);
  ComplexInclusion<Q> zero_map{{Matrix<Q>{{Q(1)}}, Matrix<Q>{{Q(0)}, {Q(0)}}}};
  CHECK(check_subcomplex(K1, K, zero_map).reason.find("injective") != std::string::npos);
  ComplexInclusion<Q> scaled{{Matrix<Q>{{Q(2)}}, e1}};
  CHECK(check_subcomplex(K1, K, scaled).reason.find("commute") != std::string::npos);
  ComplexInclusion<Q> wrong_shape{{Matrix<Q>{{Q(1)}}, Matrix<Q>{{Q(1)}}}};
  CHECK_THROWS_AS(check_subcomplex(K1, K, wrong_shape), std::invalid_argument);
  // a degree-0 generator cannot land on a twist -1 generator
  GradedFreeComplex<Q> point(2, {{0}}, {});
  ComplexInclusion<Q> skew{{Matrix<Q>{{Q(0)}}, Matrix<Q>(2, 0)}};
  CHECK_FALSE(check_subcomplex(point, K, skew).ok);
  GradedFreeComplex<Q> low(2, {{}, {0}}, {PolyMatrix<Q>(0, 1, Poly<Q>(2))});
  ComplexInclusion<Q> graded{{Matrix<Q>(1, 0), e1}};
  CHECK(check_subcomplex(low, K, graded).reason.find("twists") != std::string::npos);
}

TEST_CASE("complex validation catches inhomogeneous entries and nonzero composites") {
  auto bad_degree = GradedFreeComplex<Q>(2, {{0}, {-1}}, {poly_matrix<Q>({{"x1^2"}}, 2)});
  CHECK_FALSE(check_complex(bad_degree).ok);
  auto not_complex =
      GradedFreeComplex<Q>(2, {{0}, {-1}, {-2}}, {poly_matrix<Q>({{"x1"}}, 2), poly_matrix<Q>({{"x2"}}, 2)});
  CHECK(check_complex(not_complex).reason.find("not zero") != std::string::npos);
  CHECK_THROWS_AS(GradedFreeComplex<Q>(2, {{0}, {-1}}, {}), std::invalid_argument);
}

TEST_CASE("specialization with mixed image degrees re-derives twists") {
  testing::Rng g(testing::kSeed);
  for (int t = 0; t < 10; ++t) {
    std::vector<Poly<Q>> f;
    for (int i = 0; i < 3; ++i) {
      Poly<Q> x(3);
      while (x.is_zero()) x = testing::random_form<Q>(g, 3, g.uniform(1, 3));
      f.push_back(x);
    }
    auto S = specialize(koszul<Q>(3), f);
    CHECK(verify_complex(S));
    CHECK(S == koszul_general<Q>(3, f));
  }
}

TEST_CASE("changing the field keeps integer data") {
  auto K = koszul<Q>(3).change_field<GF<3>>();
  CHECK(verify_complex(K));
  CHECK(format_poly(K.d(2).at(0, 0)) == "2 mod 3*x2^1");
}
