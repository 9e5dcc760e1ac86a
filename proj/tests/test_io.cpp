#include <catch_amalgamated.hpp>

#include "subcx/bgg/tate.hpp"
#include "subcx/complexes/koszul.hpp"
#include "subcx/io/serialize.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace subcx;
using io::Json;
using Q = Rational;
using F3 = GF<3>;

TEST_CASE("complexes survive a JSON round trip") {
  auto K3 = koszul<Q>(3);
  auto j = io::to_json(K3);
  CHECK(j["n"] == 3);
  CHECK(j["field"] == "QQ");
  CHECK(j["terms"][1]["rank"] == 3);
  CHECK(j["terms"][1]["twist"] == -1);
  CHECK(j["diffs"][0][0][0] == "1/1*x1^1");
  CHECK(io::complex_from_json<Q>(j) == K3);
  CHECK(io::complex_from_json<Q>(Json::parse(j.dump())) == K3);

  auto mixed = koszul_general<F3>(3, {parse_poly<F3>("x1", 3), parse_poly<F3>("x2^2", 3)});
  auto jm = io::to_json(mixed);
  CHECK(jm["terms"][1]["twist"] == Json::array({-1, -2}));
  CHECK(io::complex_from_json<F3>(jm) == mixed);
  CHECK(io::complex_from_json<F3>(io::to_json(testing::en_generic_2x3<F3>())) == testing::en_generic_2x3<F3>());
}

TEST_CASE("exterior elements and modules survive a JSON round trip") {
  testing::Rng g(testing::kSeed);
  for (int t = 0; t < 20; ++t) {
    auto x = testing::random_ext<Q>(g, 4, g.uniform(0, 4));
    CHECK(io::ext_element_from_json<Q>(io::to_json(x), 4) == x);
  }
  auto I = testing::ideal_e1_e2e3<Q>().module;
  CHECK(io::module_from_json<Q>(io::to_json(I)) == I);
  auto N = tate_Nnd<F3>(2, 2);
  CHECK(io::module_from_json<F3>(io::to_json(N)) == N);

  Json ideal = {{"kind", "ideal"},
                {"n", 4},
                {"generators", Json::array({Json::array({{{"c", "1"}, {"e", {1}}}}),
                                            Json::array({{{"c", "1"}, {"e", {2, 3}}}})})}};
  auto parsed = io::module_from_json<Q>(ideal);
  CHECK(parsed == I);
  ideal["origin"] = -1;
  CHECK(io::module_from_json<Q>(ideal).origin() == -1);
}

TEST_CASE("malformed payloads are format errors") {
  auto good = io::to_json(koszul<Q>(2));
  auto broken = [&](auto edit) {
    auto j = good;
    edit(j);
    return j;
  };
  CHECK_THROWS_AS(io::complex_from_json<Q>(Json::parse("[]")), io::FormatError);
  CHECK_THROWS_AS(io::complex_from_json<Q>(broken([](Json& j) { j.erase("terms"); })), io::FormatError);
  CHECK_THROWS_AS(io::complex_from_json<Q>(broken([](Json& j) { j["n"] = "two"; })), io::FormatError);
  CHECK_THROWS_AS(io::complex_from_json<Q>(broken([](Json& j) { j["field"] = "GF(3)"; })), io::FormatError);
  CHECK_THROWS_AS(io::complex_from_json<Q>(broken([](Json& j) { j["terms"][0]["rank"] = -1; })), io::FormatError);
  CHECK_THROWS_AS(io::complex_from_json<Q>(broken([](Json& j) { j["diffs"].erase(1); })), io::FormatError);
  CHECK_THROWS_AS(io::complex_from_json<Q>(broken([](Json& j) { j["diffs"][0][0][0] = 7; })), io::FormatError);
  CHECK_THROWS_AS(io::complex_from_json<Q>(broken([](Json& j) { j["diffs"][0][0].erase(0); })), io::FormatError);
  CHECK_THROWS_AS(io::complex_from_json<Q>(broken([](Json& j) { j["terms"][1]["twist"] = {1}; })), io::FormatError);
  CHECK_THROWS_AS(io::complex_from_json<Q>(broken([](Json& j) { j["diffs"][0][0][0] = "x9"; })), std::invalid_argument);

  CHECK_THROWS_AS(io::ext_element_from_json<Q>(Json::parse(R"([{"c":"1","e":[2,1]}])"), 3), io::FormatError);
  CHECK_THROWS_AS(io::ext_element_from_json<Q>(Json::parse(R"([{"c":"1","e":[4]}])"), 3), io::FormatError);
  CHECK_THROWS_AS(io::ext_element_from_json<Q>(Json::parse(R"([{"c":1,"e":[1]}])"), 3), io::FormatError);
  CHECK_THROWS_AS(io::ext_element_from_json<Q>(Json::parse(R"({"c":"1"})"), 3), io::FormatError);

  auto mod = io::to_json(tate_Nnd<Q>(2, 2));
  auto bad_mod = mod;
  bad_mod["action"].erase(0);
  CHECK_THROWS_AS(io::module_from_json<Q>(bad_mod), io::FormatError);
  bad_mod = mod;
  bad_mod["kind"] = "quotient";
  CHECK_THROWS_AS(io::module_from_json<Q>(bad_mod), io::FormatError);
  bad_mod = mod;
  bad_mod["dims"] = "3";
  CHECK_THROWS_AS(io::module_from_json<Q>(bad_mod), io::FormatError);
}
