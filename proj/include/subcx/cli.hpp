#pragma once

// Command-line front end. run() parses argv, computes, prints one JSON
// document on `out` and returns the exit code:
//   0 accepted / member / found / valid
//   1 rejected / non-member / exhausted / invalid
//   2 usage or input error
//   3 search budget or enumeration cap exceeded (inconclusive)
// The default coefficient field comes from SUBCX_FIELD when --field is absent.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subcx/algebra/field_dispatch.hpp"
#include "subcx/bgg/bgg_l.hpp"
#include "subcx/bgg/tate.hpp"
#include "subcx/complexes/eagon_northcott.hpp"
#include "subcx/complexes/koszul.hpp"
#include "subcx/io/serialize.hpp"
#include "subcx/oracle/containment.hpp"
#include "subcx/oracle/subcomplex_search.hpp"
#include "subcx/ranks/en_filter.hpp"

namespace subcx::cli {

enum ExitCode : int { kAccept = 0, kReject = 1, kUsage = 2, kBudget = 3 };

namespace detail {

inline io::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io::FormatError("cannot open '" + path + "'");
  try {
    return io::Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw io::FormatError("malformed JSON in '" + path + "': " + e.what());
  }
}

inline std::string default_field(const std::string& fallback) {
  const char* env = std::getenv("SUBCX_FIELD");
  return env && *env ? std::string(env) : fallback;
}

/// Splits "x1^2, x2*x3" at top-level commas.
inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline int highest_variable(const std::string& s) {
  int best = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == 'x') {
      std::size_t j = i + 1;
      int v = 0;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) v = v * 10 + (s[j++] - '0');
      best = std::max(best, v);
    }
  return best;
}

inline std::pair<int, int> parse_pair(const std::string& s) {
  auto v = parse_int_list(s);
  if (v.size() != 2) throw std::invalid_argument("expected two integers 'a,b', got '" + s + "'");
  return {v[0], v[1]};
}

template <FiniteField K>
GradedFreeComplex<K> complex_over(const io::Json& j) {
  const auto f = io::field_of(j);
  if (f == "QQ") return io::complex_from_json<Rational>(j).template change_field<K>();
  return io::complex_from_json<K>(j);
}

template <FiniteField K>
ExtModule<K> module_over(const io::Json& j) {
  const auto f = io::field_of(j);
  if (f == "QQ") return io::module_from_json<Rational>(j).template change_field<K>();
  return io::module_from_json<K>(j);
}

}  // namespace detail

struct Options {
  int n = 0, d = 0, s = 0, m = 0, p = 0, q = 0;
  int ambient = 0;
  int vars = 0;
  std::string field;
  std::string r, forms, matrix, mnd, module, complex, spec, sign = "plus-first", json_out;
  std::uint64_t budget = kDefaultSearchBudget;
  std::size_t cap = kMaxSubmoduleEnumerationDim;
  bool strand = false, count_all = false, from_origin = false;
  std::uint64_t seed = 0;
};

/// Runs one subcommand; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Subcomplexes of graded free complexes: constructors, rank-sequence tests and brute-force oracles",
               "subcx"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--json-out", o.json_out, "Also write the JSON result to this file");
  app.add_option("--seed", o.seed, "Reserved; every computation is deterministic");

  auto field_opt = [&](CLI::App* sc, const char* fallback) {
    sc->add_option("--field", o.field, std::string("Coefficient field: QQ or a prime such as GF(2) (default ") +
                                           fallback + ", or $SUBCX_FIELD)");
  };

  auto* koszul_cmd = app.add_subcommand("koszul", "Koszul complex on x1..xn");
  koszul_cmd->add_option("--n", o.n, "Number of variables")->required()->check(CLI::Range(0, 16));
  koszul_cmd->add_option("--sign", o.sign, "Sign convention: plus-first or minus-first")
      ->check(CLI::IsMember({"plus-first", "minus-first"}));
  field_opt(koszul_cmd, "QQ");

  auto* kgen_cmd = app.add_subcommand("koszul-gen", "Koszul complex on given forms");
  kgen_cmd->add_option("--forms", o.forms, "Comma-separated forms, e.g. x1^2,x2*x3")->required();
  kgen_cmd->add_option("--vars", o.vars, "Number of variables (default: highest index used)");
  field_opt(kgen_cmd, "QQ");

  auto* en_cmd = app.add_subcommand("en", "Eagon-Northcott complex of a matrix");
  auto* en_matrix = en_cmd->add_option("--matrix", o.matrix, "JSON file {\"n\", \"matrix\": rows of polynomials}");
  auto* en_mnd = en_cmd->add_option("--mnd", o.mnd, "n,d for the banded d x (n+d-1) matrix M^{n,d}");
  en_matrix->excludes(en_mnd);
  field_opt(en_cmd, "QQ");

  auto* strand_cmd = app.add_subcommand("strand", "Linear strand L_{n,d}");
  strand_cmd->add_option("--n", o.n)->required()->check(CLI::Range(1, 12));
  strand_cmd->add_option("--d", o.d)->required()->check(CLI::Range(1, 12));
  field_opt(strand_cmd, "QQ");

  auto* bggl_cmd = app.add_subcommand("bgg-l", "Linear complex of an exterior module");
  bggl_cmd->add_option("--module", o.module, "Module JSON file")->required();
  bggl_cmd->add_flag("--from-origin", o.from_origin, "Place position 0 at degree origin - n");
  field_opt(bggl_cmd, "QQ");

  auto* cartan_cmd = app.add_subcommand("cartan", "Cartan differential between degree-(s-1) and degree-s monomials (s = 0: the socle)");
  cartan_cmd->add_option("--n", o.n)->required()->check(CLI::Range(1, 16));
  cartan_cmd->add_option("--s", o.s)->required()->check(CLI::Range(0, 16));
  cartan_cmd->add_option("--ambient", o.ambient, "Number of exterior generators (default n)");
  field_opt(cartan_cmd, "QQ");

  auto* tate_cmd = app.add_subcommand("tate-n", "The module N_{n,d}");
  tate_cmd->add_option("--n", o.n)->required()->check(CLI::Range(1, 12));
  tate_cmd->add_option("--d", o.d)->required()->check(CLI::Range(1, 12));
  tate_cmd->add_option("--ambient", o.ambient, "Number of exterior generators (default n)");
  field_opt(tate_cmd, "QQ");

  auto* rs_cmd = app.add_subcommand("rs-check", "Is r a rank sequence of a Koszul subcomplex?");
  rs_cmd->add_option("--m", o.m)->required()->check(CLI::Range(0, 30));
  rs_cmd->add_option("--r", o.r, "Comma-separated, index 0 first")->required();

  auto* filt_cmd = app.add_subcommand("en-filter", "Necessary condition for Eagon-Northcott subcomplexes");
  filt_cmd->add_option("--n", o.n);
  filt_cmd->add_option("--d", o.d);
  filt_cmd->add_option("--p", o.p, "Rows of the matrix (with --q)");
  filt_cmd->add_option("--q", o.q, "Columns of the matrix (with --p)");
  filt_cmd->add_option("--r", o.r, "Comma-separated; full mode starts at the augmentation rank")->required();
  filt_cmd->add_flag("--strand", o.strand, "r is a rank sequence of the linear strand");

  auto* sum_cmd = app.add_subcommand("sumset", "Membership in a weighted Koszul sumset");
  sum_cmd->add_option("--spec", o.spec, "Parts CxM, e.g. 3x2,2x1,1x0")->required();
  sum_cmd->add_option("--r", o.r, "Comma-separated, index 0 first")->required();

  auto* osub_cmd = app.add_subcommand("oracle-sub", "Exhaustive subcomplex search over a prime field");
  osub_cmd->add_option("--complex", o.complex, "Complex JSON file")->required();
  osub_cmd->add_option("--r", o.r, "Target rank sequence, comma-separated")->required();
  osub_cmd->add_option("--budget", o.budget, "Largest admissible search space");
  osub_cmd->add_flag("--count-all", o.count_all, "Count every solution instead of stopping at the first");
  field_opt(osub_cmd, "GF(2)");

  auto* ohf_cmd = app.add_subcommand("oracle-hf", "Hilbert functions of all submodules");
  ohf_cmd->add_option("--module", o.module, "Module JSON file")->required();
  ohf_cmd->add_option("--cap", o.cap, "Largest total dimension enumerated");
  field_opt(ohf_cmd, "GF(2)");

  auto* cont_cmd = app.add_subcommand("containment", "Hilbert-function containment for N_{n,d}");
  cont_cmd->add_option("--n", o.n)->required()->check(CLI::Range(1, 8));
  cont_cmd->add_option("--d", o.d)->required()->check(CLI::Range(1, 8));
  cont_cmd->add_option("--ambient", o.ambient, "Exterior generators for the n = 1 identity (default 2)");
  cont_cmd->add_option("--cap", o.cap, "Largest total dimension enumerated");
  field_opt(cont_cmd, "GF(2)");

  auto* verify_cmd = app.add_subcommand("verify", "Check homogeneity and d*d = 0");
  verify_cmd->add_option("--complex", o.complex, "Complex JSON file")->required();

  std::vector<std::string> argv_store{"subcx"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAccept;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  io::Json result;
  int code = kAccept;
  auto field_or = [&](const char* fallback) { return o.field.empty() ? detail::default_field(fallback) : o.field; };
  auto sequence = [&] { return RankSequence(parse_int_list(o.r)); };

  try {
    if (koszul_cmd->parsed()) {
      auto conv = o.sign == "plus-first" ? KoszulSign::plus_first : KoszulSign::minus_first;
      result = with_field(field_or("QQ"), [&](auto k) { return io::to_json(koszul<decltype(k)>(o.n, conv)); });
    } else if (kgen_cmd->parsed()) {
      const int nv = o.vars > 0 ? o.vars : detail::highest_variable(o.forms);
      result = with_field(field_or("QQ"), [&](auto k) {
        using K = decltype(k);
        std::vector<Poly<K>> f;
        for (const auto& t : detail::split_commas(o.forms)) f.push_back(parse_poly<K>(t, nv));
        return io::to_json(koszul_general<K>(nv, f));
      });
    } else if (en_cmd->parsed()) {
      if (o.matrix.empty() == o.mnd.empty()) throw std::invalid_argument("en needs exactly one of --matrix or --mnd");
      if (!o.mnd.empty()) {
        auto [n, d] = detail::parse_pair(o.mnd);
        if (n < 1 || d < 1 || n + d > 20) throw std::invalid_argument("--mnd needs n, d >= 1 and n + d <= 20");
        result = with_field(field_or("QQ"), [&](auto k) {
          using K = decltype(k);
          return io::to_json(eagon_northcott(matrix_Mnd<K>(n, d)));
        });
      } else {
        auto j = detail::read_json_file(o.matrix);
        const int nv = io::detail::require_int(j, "n");
        const auto& rows = io::detail::require(j, "matrix");
        if (!rows.is_array() || rows.empty() || !rows[0].is_array()) throw io::FormatError("\"matrix\" must be a list of rows");
        result = with_field(o.field.empty() ? io::field_of(j) : o.field, [&](auto k) {
          using K = decltype(k);
          return io::to_json(eagon_northcott(io::poly_matrix_from_json<K>(rows, rows.size(), rows[0].size(), nv)));
        });
      }
    } else if (strand_cmd->parsed()) {
      result = with_field(field_or("QQ"), [&](auto k) { return io::to_json(linear_strand_Lnd<decltype(k)>(o.n, o.d)); });
    } else if (bggl_cmd->parsed()) {
      auto j = detail::read_json_file(o.module);
      result = with_field(o.field.empty() ? io::field_of(j) : o.field, [&](auto k) {
        using K = decltype(k);
        auto N = io::module_from_json<K>(j);
        return io::to_json(o.from_origin ? bgg_L_from_origin(N) : bgg_L(N));
      });
    } else if (cartan_cmd->parsed()) {
      const int amb = o.ambient > 0 ? o.ambient : o.n;
      if (amb < o.n) throw std::invalid_argument("--ambient must be at least n");
      result = with_field(field_or("QQ"), [&](auto k) {
        using K = decltype(k);
        auto D = cartan_differential<K>(o.s, o.n, amb);
        io::Json r;
        r["n"] = o.n;
        r["ambient"] = amb;
        r["s"] = o.s;
        r["field"] = K::field_name();
        r["rows"] = D.rows();
        r["cols"] = D.cols();
        r["matrix"] = io::to_json(D);
        return r;
      });
    } else if (tate_cmd->parsed()) {
      const int amb = o.ambient > 0 ? o.ambient : o.n;
      if (amb < o.n) throw std::invalid_argument("--ambient must be at least n");
      result = with_field(field_or("QQ"), [&](auto k) {
        using K = decltype(k);
        auto N = tate_Nnd<K>(o.n, o.d, amb);
        io::Json r;
        r["hilbert_function"] = io::to_json(N.hilbert_function());
        r["module"] = io::to_json(N);
        return r;
      });
    } else if (rs_cmd->parsed()) {
      auto r = sequence();
      bool ok = is_koszul_rs(r, o.m);
      result["m"] = o.m;
      result["r"] = io::to_json(r);
      result["accepted"] = ok;
      code = ok ? kAccept : kReject;
    } else if (filt_cmd->parsed()) {
      int n = o.n, d = o.d;
      const bool by_nd = n > 0 || d > 0, by_pq = o.p > 0 || o.q > 0;
      if (by_nd == by_pq) throw std::invalid_argument("en-filter needs either --n and --d or --p and --q");
      if (by_pq) {
        en_weights_pq(o.p, o.q);  // validates p <= q
        n = o.q - o.p + 1;
        d = o.p;
      }
      auto v = en_rs_filter(sequence(), n, d, o.strand ? FilterMode::strand : FilterMode::full);
      result["n"] = n;
      result["d"] = d;
      result["mode"] = o.strand ? "strand" : "full";
      result["r"] = io::to_json(sequence());
      result["verdict"] = to_string(v.verdict);
      result["reason"] = v.reason;
      if (d >= 2) result["weights"] = en_weights(n, d).to_string();
      if (v.certificate) result["certificate"] = io::to_json(*v.certificate, en_weights(n, d));
      code = v.verdict == Admissibility::possibly_admissible ? kAccept : kReject;
    } else if (sum_cmd->parsed()) {
      auto spec = parse_sumset_spec(o.spec);
      auto cert = sumset_membership(sequence(), spec);
      result["spec"] = spec.to_string();
      result["r"] = io::to_json(sequence());
      auto c = io::to_json(cert, spec);
      result["member"] = c["member"];
      result["parts"] = c["parts"];
      code = cert.member ? kAccept : kReject;
    } else if (osub_cmd->parsed()) {
      auto j = detail::read_json_file(o.complex);
      const auto field = field_or("GF(2)");
      if (field == "QQ") throw std::invalid_argument("the oracle needs a prime field");
      bool found = with_prime_field(parse_prime_field(field), [&](auto k) {
        using K = decltype(k);
        auto rep = subcomplex_search(detail::complex_over<K>(j), sequence(), SearchOptions{o.budget, o.count_all});
        result = io::to_json(rep);
        return rep.verdict == SearchVerdict::found;
      });
      code = found ? kAccept : kReject;
    } else if (ohf_cmd->parsed()) {
      auto j = detail::read_json_file(o.module);
      const auto field = field_or("GF(2)");
      if (field == "QQ") throw std::invalid_argument("the oracle needs a prime field");
      with_prime_field(parse_prime_field(field), [&](auto k) {
        using K = decltype(k);
        auto N = detail::module_over<K>(j);
        result["field"] = K::field_name();
        result["module_hilbert_function"] = io::to_json(N.hilbert_function());
        result["hilbert_functions"] = io::to_json(enumerate_submodule_hfs(N, o.cap));
      });
    } else if (cont_cmd->parsed()) {
      const auto field = field_or("GF(2)");
      if (field == "QQ") throw std::invalid_argument("the oracle needs a prime field");
      std::optional<int> amb;
      if (o.ambient > 0) amb = o.ambient;
      bool holds = with_prime_field(parse_prime_field(field), [&](auto k) {
        using K = decltype(k);
        auto rep = verify_containment<K>(o.n, o.d, amb, o.cap);
        result = io::to_json(rep);
        return rep.holds();
      });
      code = holds ? kAccept : kReject;
    } else if (verify_cmd->parsed()) {
      auto j = detail::read_json_file(o.complex);
      auto check = with_field(io::field_of(j), [&](auto k) { return check_complex(io::complex_from_json<decltype(k)>(j)); });
      result["ok"] = check.ok;
      result["reason"] = check.reason;
      code = check.ok ? kAccept : kReject;
    }
  } catch (const BudgetExceeded& e) {
    err << "inconclusive: " << e.what() << "\n";
    io::Json r;
    r["verdict"] = "budget-exceeded";
    r["required"] = e.required;
    r["budget"] = e.budget;
    out << r.dump(2) << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const auto text = result.dump(2) + "\n";
  out << text;
  if (!o.json_out.empty()) {
    std::ofstream f(o.json_out);
    if (!f) {
      err << "error: cannot write '" << o.json_out << "'\n";
      return kUsage;
    }
    f << text;
  }
  return code;
}

}  // namespace subcx::cli
