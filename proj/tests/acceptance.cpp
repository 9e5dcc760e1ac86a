// Runs the ten acceptance criteria, each against its runtime limit, and
// prints one PASS/FAIL line per criterion. Exit status is the failure count.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "subcx/subcx.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace subcx;
using Q = Rational;
using F2 = GF<2>;
using testing::poly_matrix;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

template <FiniteField K>
std::set<RankSequence> found_set(const GradedFreeComplex<K>& G) {
  std::set<RankSequence> out;
  std::vector<int> r(G.length(), 0);
  while (true) {
    if (subcomplex_search(G, RankSequence(r)).verdict == SearchVerdict::found) out.insert(RankSequence(r));
    std::size_t k = 0;
    while (k < r.size() && ++r[k] > static_cast<int>(G.rank(k))) r[k++] = 0;
    if (k == r.size()) break;
  }
  return out;
}

template <FiniteField K>
bool generic_2x3_exhausted() {
  return subcomplex_search(testing::en_generic_2x3<K>(), RankSequence{1, 2, 1}).verdict == SearchVerdict::exhausted;
}

Outcome koszul_fixtures() {
  Outcome o;
  auto K = koszul<Q>(3);
  o.require(K.d(1) == poly_matrix<Q>({{"x1", "x2", "x3"}}, 3), "first Koszul map differs");
  o.require(equal_up_to_column_sign(K.d(2), poly_matrix<Q>({{"-x2", "-x3", "0"}, {"x1", "0", "-x3"}, {"0", "x1", "x2"}}, 3)),
            "second Koszul map differs");
  o.require(equal_up_to_column_sign(K.d(3), poly_matrix<Q>({{"x3"}, {"-x2"}, {"x1"}}, 3)), "third Koszul map differs");
  for (int n = 0; n <= 6; ++n) o.require(verify_complex(koszul<Q>(n)), "koszul(" + std::to_string(n) + ") is not a complex");
  return o;
}

Outcome en_fixtures() {
  Outcome o;
  auto G = eagon_northcott(matrix_Mnd<Q>(3, 2));
  std::vector<std::pair<std::size_t, int>> terms;
  for (std::size_t i = 0; i < G.length(); ++i) terms.emplace_back(G.rank(i), G.uniform_twist(i).value_or(1));
  o.require(terms == std::vector<std::pair<std::size_t, int>>{{1, 0}, {6, -2}, {8, -3}, {3, -4}}, "EN(M^{3,2}) terms differ");
  o.require(verify_complex(G), "EN(M^{3,2}) is not a complex");
  auto L = linear_strand_Lnd<Q>(4, 3);
  o.require(L.rank_sequence() == RankSequence{20, 45, 36, 10}, "L_{4,3} ranks are " + L.rank_sequence().to_string());
  return o;
}

Outcome bgg_fixture() {
  Outcome o;
  auto N = testing::ideal_e1_e2e3<Q>().module;
  auto L = bgg_L(N);
  o.require(L.d(3) == poly_matrix<Q>({{"x2"}, {"x3"}, {"x4"}, {"0"}}, 4), "first matrix differs");
  o.require(L.d(2) == poly_matrix<Q>({{"x3", "-x2", "0", "x1"}, {"x4", "0", "-x2", "0"}, {"0", "x4", "-x3", "0"}, {"0", "0", "0", "x4"}}, 4),
            "middle matrix differs");
  o.require(L.d(1) == poly_matrix<Q>({{"x4", "-x3", "x2", "-x1"}}, 4), "last matrix differs");
  o.require(bgg_L_from_origin(N).rank_sequence() == RankSequence{1, 4, 4, 1, 0}, "rank sequence differs");
  for (int n = 1; n <= 5; ++n) {
    auto E = bgg_L(exterior_algebra<Q>(n).twist(-n));
    auto K = koszul<Q>(n);
    o.require(E.all_twists() == K.all_twists() && match_up_to_signed_permutation(E, K).has_value(),
              "L(E(-" + std::to_string(n) + ")) is not the Koszul complex");
  }
  return o;
}

Outcome koszul_two_sided() {
  Outcome o;
  for (int m = 0; m <= 3; ++m)
    o.require(found_set(koszul<F2>(m)) == enumerate_koszul_rs(m), "found-set differs for m = " + std::to_string(m));
  o.require(enumerate_koszul_rs(2) == std::set<RankSequence>{{1, 2, 1}, {1, 2, 0}, {1, 1, 0}, {1, 0, 0}, {0, 0, 0}},
            "RS(K_2) differs from the listed five");
  return o;
}

Outcome introduction_question() {
  Outcome o;
  o.require(subcomplex_search(koszul<F2>(3), RankSequence{1, 2, 2, 0}).verdict == SearchVerdict::exhausted,
            "oracle found (1,2,2,0)");
  o.require(macaulay_shift(2, 1) == 1, "2^(1) != 1");
  o.require(!is_koszul_rs(RankSequence{1, 2, 2, 0}, 3), "characterization accepts (1,2,2,0)");
  return o;
}

Outcome en_filter_fixtures() {
  Outcome o;
  o.require(en_weights(4, 3).parts == std::vector<SumsetPart>{{10, 3}, {6, 2}, {3, 1}, {1, 0}}, "weights of (4,3) differ");
  o.require(en_rs_filter(RankSequence{1, 5, 5, 3}, 3, 2).verdict == Admissibility::ruled_out, "(1,5,5,3) not ruled out");
  o.require(en_rs_filter(RankSequence{10, 16, 20, 8}, 4, 3, FilterMode::strand).verdict == Admissibility::ruled_out,
            "(10,16,20,8) not ruled out");
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; n + d <= 6; ++d)
      o.require(en_rs_filter(linear_strand_Lnd<Q>(n, d).rank_sequence(), n, d, FilterMode::strand).verdict ==
                    Admissibility::possibly_admissible,
                "strand of (" + std::to_string(n) + "," + std::to_string(d) + ") fails its own filter");
  return o;
}

Outcome strict_containment() {
  Outcome o;
  auto rep = verify_containment<F2>(2, 2);
  o.require(rep.holds(), "containment fails");
  o.require(rep.strict(), "containment is an equality");
  o.require(rep.lhs.count(HilbertFunction{1, 1, 0}) == 0, "(1,1,0) occurs in HF(N_{2,2})");
  o.require(rep.rhs.count(HilbertFunction{1, 1, 0}) == 1, "(1,1,0) missing from the right side");
  return o;
}

Outcome generic_versus_specialized() {
  Outcome o;
  auto Fp = testing::en_generic_2x3<Q>();
  std::vector<Poly<Q>> images{Poly<Q>(4), parse_poly<Q>("x2", 4), parse_poly<Q>("x3", 4), Poly<Q>(4)};
  auto F = specialize(Fp, images).change_field<F2>();
  o.require(F == testing::en_specialized_2x3<F2>(), "specialization differs from the EN complex of the specialized matrix");
  auto rep = subcomplex_search(F, RankSequence{1, 2, 1});
  o.require(rep.verdict == SearchVerdict::found && rep.witness && is_subcomplex(rep.witness->sub, F, rep.witness->inclusion),
            "no (1,2,1) subcomplex in the specialization");
  o.require(generic_2x3_exhausted<F2>(), "generic complex has (1,2,1) over GF(2)");
  o.require(generic_2x3_exhausted<GF<3>>(), "generic complex has (1,2,1) over GF(3)");
  o.require(generic_2x3_exhausted<GF<5>>(), "generic complex has (1,2,1) over GF(5)");
  return o;
}

Outcome regular_sequence_invariance() {
  Outcome o;
  const std::vector<std::vector<std::string>> sequences{{"x1^2", "x2*x3", "x3^3"}, {"x1*x2", "x1^2 + x3^2"}};
  for (const auto& forms : sequences) {
    const int m = static_cast<int>(forms.size());
    std::vector<Poly<Q>> f;
    for (const auto& s : forms) f.push_back(parse_poly<Q>(s, 3));
    auto G = specialize(koszul<Q>(m), f);
    for (const auto& r : enumerate_koszul_rs(m)) {
      auto w = koszul_rs_witness<Q>(r, m);
      o.require(is_subcomplex(specialize(w.sub, f), G, w.inclusion), "pushed witness " + r.to_string() + " fails");
    }
  }
  return o;
}

Outcome property_suites() {
  Outcome o;
  for (std::int64_t a = 1; a <= 500; ++a)
    for (int i = 1; i <= 6; ++i) {
      auto e = macaulay_expansion(a, i);
      std::int64_t sum = 0;
      for (std::size_t t = 0; t < e.size(); ++t) sum += binomial(e[t], i - static_cast<int>(t));
      o.require(sum == a, "Macaulay round trip fails at " + std::to_string(a));
      o.require(macaulay_shift(a - 1, i) <= macaulay_shift(a, i), "Macaulay shift not monotone at " + std::to_string(a));
    }
  for (int n = 1; n <= 5; ++n)
    for (int s = 1; s <= 5; ++s) {
      auto d = cartan_differential<Q>(s, n);
      o.require(d.rows() == static_cast<std::size_t>(binomial(n + s - 2, s - 1)) &&
                    d.cols() == static_cast<std::size_t>(binomial(n + s - 1, s)),
                "Cartan shape");
      auto comp = d * cartan_differential<Q>(s + 1, n);
      for (const auto& [pos, x] : comp.entries()) o.require(x.is_zero(), "Cartan composite is nonzero");
    }
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; n + d <= 5; ++d) {
      o.require(verify_complex(eagon_northcott(matrix_Mnd<Q>(n, d))), "EN d*d != 0");
      o.require(verify_complex(bgg_L(tate_Nnd<Q>(n, d))), "L(N) d*d != 0");
      o.require(tate_window_is_complex(tate_window<Q>(n, 0, 4)), "Tate window d*d != 0");
    }
  o.require(verify_complex(koszul_general<Q>(3, {parse_poly<Q>("x1^2 + x2*x3", 3), parse_poly<Q>("x3^3", 3)})),
            "general Koszul d*d != 0");
  // zero differentials: every choice is a subcomplex
  auto zero = GradedFreeComplex<F2>::uniform(2, {3, 4, 2}, {0, -1, -2},
                                             {PolyMatrix<F2>(3, 4, Poly<F2>(2)), PolyMatrix<F2>(4, 2, Poly<F2>(2))});
  auto rep = subcomplex_search(zero, RankSequence{1, 2, 1}, {kDefaultSearchBudget, true});
  const auto g2 = gaussian_binomial(2, 1, 2), g1 = gaussian_binomial(4, 2, 2), g0 = gaussian_binomial(3, 1, 2);
  o.require(rep.solutions == g2 * g1 * g0, "solution count is not the Gaussian product");
  o.require(rep.candidates == g2 + g2 * g1 + g2 * g1 * g0, "candidate count is not the sum of partial products");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"Koszul fixtures", 1, koszul_fixtures},
      {"Eagon-Northcott fixtures", 5, en_fixtures},
      {"linear complex of an exterior ideal", 2, bgg_fixture},
      {"Koszul rank sequences: characterization equals oracle", 300, koszul_two_sided},
      {"(1,2,2,0) is not a Koszul rank sequence", 60, introduction_question},
      {"Eagon-Northcott filter fixtures", 60, en_filter_fixtures},
      {"strict Hilbert-function containment for N_{2,2}", 10, strict_containment},
      {"generic versus specialized 2x3 complex", 600, generic_versus_specialized},
      {"Koszul witnesses along regular sequences", 60, regular_sequence_invariance},
      {"property suites", 120, property_suites},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs >= c.limit_seconds) {
      out.ok = false;
      out.note = "over the time limit";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (out.ok ? "PASS" : "FAIL") << ' ' << (i + 1) << ' ' << c.name << " (" << secs << " s, limit " << c.limit_seconds
         << " s)";
    if (!out.ok) line << ": " << out.note;
    std::cout << line.str() << '\n';
    failures += out.ok ? 0 : 1;
  }
  return failures;
}
