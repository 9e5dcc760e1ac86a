#pragma once

// Scalar fields: exact rationals and prime fields GF(p) with a compile-time
// modulus. Every generic algorithm in the library is written against the
// `Field` concept below.

#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace subcx {

class Rational {
 public:
  using value_type = boost::multiprecision::cpp_rational;
  using integer_type = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = value_type(integer_type(num), integer_type(den));
  }
  explicit Rational(value_type v) : v_(std::move(v)) {}

  static constexpr std::uint32_t characteristic() { return 0; }
  static std::string field_name() { return "QQ"; }

  const value_type& value() const { return v_; }
  integer_type numerator() const { return boost::multiprecision::numerator(v_); }
  integer_type denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Rational operator-() const { return Rational(value_type(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero in QQ");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  Rational inverse() const { return Rational(1) / *this; }
  static Rational from_rational(const Rational& q) { return q; }

  /// "num/den", always with an explicit denominator.
  std::string to_string() const {
    return numerator().str() + "/" + denominator().str();
  }

  /// Accepts "a", "-a", "a/b".
  static Rational parse(std::string_view text);

 private:
  value_type v_{0};
};

inline std::string to_string(const Rational& r) { return r.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

inline Rational::integer_type parse_integer(std::string_view s) {
  s = trim(s);
  if (!is_integer_literal(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Rational::integer_type(std::string(s));
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  text = detail::trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(value_type(detail::parse_integer(text)));
  auto num = detail::parse_integer(text.substr(0, slash));
  auto den = detail::parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(value_type(num, den));
}

constexpr bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Residues modulo a small prime, stored canonically in [0, P).
template <std::uint32_t P>
class GF {
  static_assert(is_prime(P), "GF<P> needs a prime modulus");
  static_assert(P < (1u << 16), "GF<P> is meant for small primes");

 public:
  static constexpr std::uint32_t modulus = P;

  GF() = default;
  GF(long long v)  // NOLINT(google-explicit-constructor)
      : v_(static_cast<std::uint32_t>(((v % static_cast<long long>(P)) + P) % P)) {}

  static constexpr std::uint32_t characteristic() { return P; }
  static std::string field_name() { return "GF(" + std::to_string(P) + ")"; }

  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  GF operator-() const { return from_residue(v_ == 0 ? 0 : P - v_); }
  GF& operator+=(GF o) { v_ = (v_ + o.v_) % P; return *this; }
  GF& operator-=(GF o) { v_ = (v_ + P - o.v_) % P; return *this; }
  GF& operator*=(GF o) { v_ = (v_ * o.v_) % P; return *this; }
  GF& operator/=(GF o) { return *this *= o.inverse(); }
  friend GF operator+(GF a, GF b) { return a += b; }
  friend GF operator-(GF a, GF b) { return a -= b; }
  friend GF operator*(GF a, GF b) { return a *= b; }
  friend GF operator/(GF a, GF b) { return a /= b; }
  friend bool operator==(GF a, GF b) { return a.v_ == b.v_; }
  friend bool operator<(GF a, GF b) { return a.v_ < b.v_; }

  GF inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in " + field_name());
    // Fermat: a^(p-2)
    std::uint32_t result = 1, base = v_, e = P - 2;
    while (e) {
      if (e & 1u) result = result * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return from_residue(result);
  }

  static GF from_residue(std::uint32_t r) {
    GF g;
    g.v_ = r;
    return g;
  }

  /// "k mod p".
  std::string to_string() const { return std::to_string(v_) + " mod " + std::to_string(P); }

  /// Accepts "k mod p" (p must match), or an integer / "a/b" literal reduced mod p.
  static GF parse(std::string_view text) {
    text = detail::trim(text);
    auto pos = text.find("mod");
    if (pos != std::string_view::npos) {
      auto mod = detail::parse_integer(text.substr(pos + 3));
      if (mod != P)
        throw std::invalid_argument("residue '" + std::string(text) + "' is not over " + field_name());
      text = text.substr(0, pos);
    }
    return from_rational(Rational::parse(text));
  }

  static GF from_rational(const Rational& q) {
    Rational::integer_type m(P);
    Rational::integer_type num = q.numerator() % m;
    Rational::integer_type den = q.denominator() % m;
    if (den == 0)
      throw std::domain_error("denominator of " + q.to_string() + " vanishes in " + field_name());
    if (num < 0) num += m;
    return GF(num.convert_to<long long>()) / GF(den.convert_to<long long>());
  }

 private:
  std::uint32_t v_ = 0;
};

template <std::uint32_t P>
std::string to_string(GF<P> a) {
  return a.to_string();
}
template <std::uint32_t P>
std::ostream& operator<<(std::ostream& os, GF<P> a) {
  return os << a.to_string();
}

template <class K>
concept Field = std::regular<K> && std::constructible_from<K, long long> &&
                requires(const K a, const K b, std::string_view s) {
                  { a + b } -> std::same_as<K>;
                  { a - b } -> std::same_as<K>;
                  { a * b } -> std::same_as<K>;
                  { a / b } -> std::same_as<K>;
                  { -a } -> std::same_as<K>;
                  { a.is_zero() } -> std::same_as<bool>;
                  { a.inverse() } -> std::same_as<K>;
                  { a.to_string() } -> std::same_as<std::string>;
                  { K::parse(s) } -> std::same_as<K>;
                  { K::from_rational(Rational{}) } -> std::same_as<K>;
                  { K::characteristic() } -> std::convertible_to<std::uint32_t>;
                  { K::field_name() } -> std::same_as<std::string>;
                };

template <class K>
concept FiniteField = Field<K> && requires { K::modulus; };

}  // namespace subcx
