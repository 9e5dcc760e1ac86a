#pragma once

// Sparse multivariate polynomials over a Field, keyed by exponent vectors and
// iterated in graded reverse lexicographic order with x1 > x2 > ... > xn.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subcx/algebra/field.hpp"

namespace subcx {

using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

/// Strict "a comes before b" in descending grevlex.
struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

/// All monomials of total degree `deg` in `n` variables, in descending grevlex.
inline std::vector<Monomial> monomials_of_degree(int n, int deg) {
  std::vector<Monomial> out;
  if (deg < 0) return out;
  if (n == 0) {
    if (deg == 0) out.emplace_back();
    return out;
  }
  Monomial cur(n, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      cur[var] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, deg);
  std::sort(out.begin(), out.end(), GrevlexDescending{});
  return out;
}

template <Field K>
class Poly {
 public:
  using Terms = std::map<Monomial, K, GrevlexDescending>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}
  Poly(int nvars, const K& c) : nvars_(nvars) {
    if (!c.is_zero()) terms_.emplace(Monomial(nvars, 0), c);
  }

  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(int nvars, const K& c) { return Poly(nvars, c); }
  /// The variable x_{index+1}.
  static Poly variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
    Monomial m(nvars, 0);
    m[index] = 1;
    return monomial(m, K(1));
  }
  static Poly monomial(const Monomial& m, const K& c) {
    Poly p(static_cast<int>(m.size()));
    p.add_term(m, c);
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of m (zero when absent).
  K coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(const Monomial& m, const K& c) {
    if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("monomial length differs from variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Largest total degree, or nullopt for the zero polynomial.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return total_degree(terms_.begin()->first);
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return total_degree(t.first) == d; });
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }

  Poly operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Poly& operator+=(const Poly& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const K& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const K& s) { return a *= s; }
  friend Poly operator*(const K& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }
  Poly& operator*=(const Poly& o) { return *this = poly_mul(*this, o); }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Schoolbook product; zero coefficients are pruned.
  friend Poly poly_mul(const Poly& a, const Poly& b) {
    a.check_same_ring(b);
    Poly r(a.nvars_);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }

  Poly pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Poly result = constant(nvars_, K(1)), base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  /// Substitutes x_i -> images[i]; all images must live in a common ring.
  Poly substitute(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
      throw std::invalid_argument("substitution needs one image per variable");
    int target = images.empty() ? 0 : images.front().nvars();
    for (const auto& im : images)
      if (im.nvars() != target) throw std::invalid_argument("substitution images live in different rings");
    // Cache powers per variable; desk-scale exponents are tiny.
    std::vector<std::vector<Poly>> powers(nvars_);
    auto power = [&](int var, int e) -> const Poly& {
      auto& cache = powers[var];
      if (cache.empty()) cache.push_back(constant(target, K(1)));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[var]);
      return cache[e];
    };
    Poly r(target);
    for (const auto& [m, c] : terms_) {
      Poly t = constant(target, c);
      for (int i = 0; i < nvars_; ++i)
        if (m[i] > 0) t = t * power(i, m[i]);
      r += t;
    }
    return r;
  }

  /// Maps coefficients into another field (exact for integer coefficients).
  template <Field L>
  Poly<L> change_field() const
    requires std::same_as<K, Rational>
  {
    Poly<L> r(nvars_);
    for (const auto& [m, c] : terms_) r.add_term(m, L::from_rational(c));
    return r;
  }

 private:
  void check_same_ring(const Poly& o) const {
    if (nvars_ != o.nvars_)
      throw std::invalid_argument("polynomials over different variable counts (" + std::to_string(nvars_) +
                                  " vs " + std::to_string(o.nvars_) + ")");
  }

  int nvars_ = 0;
  Terms terms_;
};

}  // namespace subcx
