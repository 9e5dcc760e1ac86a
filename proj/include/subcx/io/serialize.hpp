#pragma once

// JSON forms of the library's objects. Field elements and polynomials are
// strings in their canonical text form; exterior elements are lists of
// {"c": coefficient, "e": [sorted 1-based indices]}.
//
// complex: {"n", "field", "terms": [{"rank", "twist"}], "diffs": [rows of polynomial strings]}
//          ("twist" is an int, or a per-generator list when a position mixes twists)
// module:  {"n", "field", "top", "origin", "dims": [piece dims, top degree first],
//           "action": [per generator: per piece: rows]}

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "subcx/algebra/poly_text.hpp"
#include "subcx/complexes/complex.hpp"
#include "subcx/exterior/ideal.hpp"
#include "subcx/exterior/module.hpp"
#include "subcx/oracle/containment.hpp"
#include "subcx/ranks/en_filter.hpp"

namespace subcx::io {

using Json = nlohmann::ordered_json;

struct FormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {
inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}
inline int require_int(const Json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_number_integer()) throw FormatError(std::string("key \"") + key + "\" must be an integer");
  return v.get<int>();
}
/// Runs a parser, reporting JSON type mismatches (a number where a string
/// belongs, and so on) as FormatError.
template <class Parse>
auto translating(Parse&& parse) {
  try {
    return parse();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed value: ") + e.what());
  }
}
}  // namespace detail

/// The "field" entry of a payload; "QQ" when absent.
inline std::string field_of(const Json& j) {
  if (j.is_object() && j.contains("field")) return j.at("field").get<std::string>();
  return "QQ";
}

template <Field K>
Json to_json(const Matrix<K>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Field K>
Matrix<K> matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw FormatError("matrix needs " + std::to_string(rows) + " rows");
  Matrix<K> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw FormatError("matrix row needs " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = K::parse(j[r][c].get<std::string>());
  }
  return m;
}

template <Field K>
Json to_json(const PolyMatrix<K>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_poly(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Field K>
PolyMatrix<K> poly_matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, int nvars) {
  if (!j.is_array() || j.size() != rows) throw FormatError("differential needs " + std::to_string(rows) + " rows");
  PolyMatrix<K> m(rows, cols, Poly<K>(nvars));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw FormatError("differential row needs " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, parse_poly<K>(j[r][c].get<std::string>(), nvars));
  }
  return m;
}

template <Field K>
Json to_json(const GradedFreeComplex<K>& C) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < C.length(); ++i) {
    Json t;
    t["rank"] = C.rank(i);
    if (auto u = C.uniform_twist(i)) t["twist"] = *u;
    else if (C.rank(i) == 0) t["twist"] = 0;
    else t["twist"] = C.twists(i);
    terms.push_back(std::move(t));
  }
  Json diffs = Json::array();
  for (const auto& d : C.diffs()) diffs.push_back(to_json(d));
  Json j;
  j["n"] = C.nvars();
  j["field"] = K::field_name();
  j["terms"] = std::move(terms);
  j["diffs"] = std::move(diffs);
  return j;
}

namespace detail {
template <Field K>
GradedFreeComplex<K> complex_from_json_unchecked(const Json& j) {
  const int n = detail::require_int(j, "n");
  if (n < 0) throw FormatError("n must be non-negative");
  if (field_of(j) != K::field_name()) throw FormatError("complex is over " + field_of(j) + ", expected " + K::field_name());
  const auto& terms = detail::require(j, "terms");
  if (!terms.is_array()) throw FormatError("\"terms\" must be a list");
  std::vector<std::vector<int>> twists;
  for (const auto& t : terms) {
    const int rank = detail::require_int(t, "rank");
    if (rank < 0) throw FormatError("ranks must be non-negative");
    const auto& tw = detail::require(t, "twist");
    if (tw.is_number_integer()) {
      twists.emplace_back(rank, tw.get<int>());
    } else if (tw.is_array() && static_cast<int>(tw.size()) == rank) {
      twists.push_back(tw.get<std::vector<int>>());
    } else {
      throw FormatError("\"twist\" must be an integer or one integer per generator");
    }
  }
  const auto& dj = detail::require(j, "diffs");
  if (!dj.is_array() || dj.size() != (twists.empty() ? 0 : twists.size() - 1))
    throw FormatError("a complex with " + std::to_string(twists.size()) + " terms needs " +
                      std::to_string(twists.empty() ? 0 : twists.size() - 1) + " differentials");
  std::vector<PolyMatrix<K>> diffs;
  for (std::size_t i = 0; i < dj.size(); ++i)
    diffs.push_back(poly_matrix_from_json<K>(dj[i], twists[i].size(), twists[i + 1].size(), n));
  return GradedFreeComplex<K>(n, std::move(twists), std::move(diffs));
}
}  // namespace detail

template <Field K>
GradedFreeComplex<K> complex_from_json(const Json& j) {
  return detail::translating([&] { return detail::complex_from_json_unchecked<K>(j); });
}

template <Field K>
Json to_json(const ExtElement<K>& x) {
  Json terms = Json::array();
  for (const auto& [support, c] : x.terms()) {
    Json t;
    t["c"] = c.to_string();
    t["e"] = ExtMonomial{support}.indices();
    terms.push_back(std::move(t));
  }
  return terms;
}

namespace detail {
template <Field K>
ExtElement<K> ext_element_from_json_unchecked(const Json& j, int n) {
  if (!j.is_array()) throw FormatError("exterior element must be a list of terms");
  ExtElement<K> x(n);
  for (const auto& t : j) {
    auto idx = detail::require(t, "e").get<std::vector<int>>();
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] < 1 || idx[k] > n) throw FormatError("exterior index out of range");
      if (k > 0 && idx[k] <= idx[k - 1]) throw FormatError("exterior indices must be strictly increasing");
    }
    x += ExtElement<K>::monomial(n, idx, K::parse(detail::require(t, "c").get<std::string>()));
  }
  return x;
}
}  // namespace detail

template <Field K>
ExtElement<K> ext_element_from_json(const Json& j, int n) {
  return detail::translating([&] { return detail::ext_element_from_json_unchecked<K>(j, n); });
}

template <Field K>
Json to_json(const ExtMatrix<K>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Field K>
Json to_json(const ExtModule<K>& N) {
  Json j;
  j["n"] = N.n();
  j["field"] = K::field_name();
  j["top"] = N.top();
  j["origin"] = N.origin();
  j["dims"] = N.piece_dims();
  Json act = Json::array();
  for (const auto& per_gen : N.action()) {
    Json pieces = Json::array();
    for (const auto& m : per_gen) pieces.push_back(to_json(m));
    act.push_back(std::move(pieces));
  }
  j["action"] = std::move(act);
  return j;
}

/// Accepts the explicit form above, or {"kind": "ideal", "n", "generators": [element]}
/// for the ideal of E the generators span.
namespace detail {
template <Field K>
ExtModule<K> module_from_json_unchecked(const Json& j) {
  const int n = detail::require_int(j, "n");
  if (n < 0 || n > 16) throw FormatError("n must be between 0 and 16");
  if (field_of(j) != K::field_name()) throw FormatError("module is over " + field_of(j) + ", expected " + K::field_name());
  if (j.contains("kind")) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind != "ideal") throw FormatError("unknown module kind \"" + kind + "\"");
    std::vector<ExtElement<K>> gens;
    for (const auto& g : detail::require(j, "generators")) gens.push_back(ext_element_from_json<K>(g, n));
    auto I = ideal_generated<K>(n, gens);
    return j.contains("origin") ? I.module.with_origin(j.at("origin").get<int>()) : I.module;
  }
  const int top = detail::require_int(j, "top");
  const int origin = detail::require_int(j, "origin");
  auto dims = detail::require(j, "dims").get<std::vector<std::size_t>>();
  const auto& aj = detail::require(j, "action");
  if (!aj.is_array() || static_cast<int>(aj.size()) != n) throw FormatError("\"action\" needs one entry per generator");
  std::vector<std::vector<Matrix<K>>> action(n);
  for (int i = 0; i < n; ++i) {
    if (!aj[i].is_array() || aj[i].size() != dims.size()) throw FormatError("\"action\" needs one matrix per piece");
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const std::size_t rows = k + 1 < dims.size() ? dims[k + 1] : 0;
      action[i].push_back(matrix_from_json<K>(aj[i][k], rows, dims[k]));
    }
  }
  return ExtModule<K>(n, top, origin, std::move(dims), std::move(action));
}
}  // namespace detail

template <Field K>
ExtModule<K> module_from_json(const Json& j) {
  return detail::translating([&] { return detail::module_from_json_unchecked<K>(j); });
}

template <class Tag>
Json to_json(const IntSequence<Tag>& s) {
  return s.values();
}

inline Json to_json(const MembershipCertificate& cert, const WeightedSumsetSpec& spec) {
  Json parts = Json::array();
  for (std::size_t k = 0; k < spec.parts.size(); ++k) {
    Json p;
    p["multiplicity"] = spec.parts[k].multiplicity;
    p["size"] = spec.parts[k].size;
    Json chosen = Json::array();
    if (k < cert.chosen.size())
      for (const auto& s : cert.chosen[k]) chosen.push_back(to_json(s));
    p["chosen"] = std::move(chosen);
    parts.push_back(std::move(p));
  }
  Json j;
  j["member"] = cert.member;
  j["parts"] = std::move(parts);
  return j;
}

template <Field K>
Json to_json(const SearchReport<K>& rep) {
  Json j;
  j["verdict"] = to_string(rep.verdict);
  j["target"] = to_json(rep.target);
  j["field"] = rep.field;
  j["search_space"] = rep.search_space;
  j["candidates"] = rep.candidates;
  j["solutions"] = rep.solutions;
  if (rep.witness) {
    Json w;
    Json maps = Json::array();
    for (const auto& m : rep.witness->inclusion.maps) maps.push_back(to_json(m));
    w["subspaces"] = std::move(maps);
    w["complex"] = to_json(rep.witness->sub);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline Json to_json(const std::set<HilbertFunction>& hfs) {
  Json a = Json::array();
  for (const auto& h : hfs) a.push_back(to_json(h));
  return a;
}

inline Json to_json(const ContainmentReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["d"] = rep.d;
  j["field"] = rep.field;
  j["holds"] = rep.holds();
  j["strict"] = rep.strict();
  j["lhs"] = to_json(rep.lhs);
  j["rhs"] = to_json(rep.rhs);
  Json missing = Json::array(), extra = Json::array();
  for (const auto& h : rep.missing) missing.push_back(to_json(h));
  for (const auto& h : rep.extra) extra.push_back(to_json(h));
  j["missing"] = std::move(missing);
  j["extra"] = std::move(extra);
  return j;
}

}  // namespace subcx::io
