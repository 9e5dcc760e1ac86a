#pragma once

// The exterior algebra E = k<e_1..e_n>, deg e_i = -1. Square-free monomials
// are bitmasks (bit i-1 <-> e_i); within a degree they are ordered
// lexicographically by their sorted index lists (e1e2 < e1e3 < e1e4 < e2e3).

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "subcx/algebra/matrix.hpp"

namespace subcx {

/// Desk-scale cap on exterior generators (bitmask width is not the binding limit).
inline constexpr int kMaxExteriorVariables = 16;

struct ExtMonomial {
  std::uint32_t support = 0;

  int size() const { return std::popcount(support); }
  /// Internal degree: -|support|.
  int degree() const { return -size(); }
  std::vector<int> indices() const {  // 1-based, increasing
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
      if (support >> i & 1u) out.push_back(i + 1);
    return out;
  }
  static ExtMonomial from_indices(const std::vector<int>& idx) {
    ExtMonomial m;
    for (int i : idx) {
      if (i < 1 || i > 32) throw std::out_of_range("exterior index out of range");
      std::uint32_t bit = 1u << (i - 1);
      if (m.support & bit) throw std::invalid_argument("repeated exterior generator");
      m.support |= bit;
    }
    return m;
  }
  friend bool operator==(ExtMonomial a, ExtMonomial b) { return a.support == b.support; }
};

struct SignedExtMonomial {
  int sign;  // +1 or -1
  ExtMonomial monomial;
};

/// a ^ b: zero when supports meet, otherwise the union with sign
/// (-1)^{#{(i in a, j in b) : i > j}}.
inline std::optional<SignedExtMonomial> ext_mul(ExtMonomial a, ExtMonomial b) {
  if (a.support & b.support) return std::nullopt;
  int inversions = 0;
  for (std::uint32_t rest = b.support; rest; rest &= rest - 1) {
    std::uint32_t j = static_cast<std::uint32_t>(std::countr_zero(rest));
    // elements of a strictly above position j
    inversions += std::popcount(a.support & ~((2u << j) - 1u));
  }
  return SignedExtMonomial{(inversions % 2) ? -1 : 1, ExtMonomial{a.support | b.support}};
}

/// Lex-ordered bases of each exterior power, with reverse lookup.
class ExteriorBasis {
 public:
  explicit ExteriorBasis(int n) : n_(n), by_size_(n + 1) {
    if (n < 0 || n > kMaxExteriorVariables)
      throw std::invalid_argument("exterior algebra needs 0 <= n <= " + std::to_string(kMaxExteriorVariables));
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
      by_size_[cur.size()].push_back(ExtMonomial::from_indices(cur).support);
      for (int i = next; i <= n_; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 1);  // preorder DFS yields lex order inside each size class
    for (auto& v : by_size_)
      for (std::size_t i = 0; i < v.size(); ++i) index_[v[i]] = i;
  }

  int n() const { return n_; }
  /// Monomials with |support| = k in lex order.
  const std::vector<std::uint32_t>& of_size(int k) const { return by_size_.at(k); }
  std::size_t index(std::uint32_t support) const { return index_.at(support); }
  std::size_t dim(int k) const { return k < 0 || k > n_ ? 0 : by_size_[k].size(); }

 private:
  int n_;
  std::vector<std::vector<std::uint32_t>> by_size_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

/// A k-linear combination of exterior monomials.
template <Field K>
class ExtElement {
 public:
  ExtElement() = default;
  explicit ExtElement(int n) : n_(n) {}
  static ExtElement monomial(int n, const std::vector<int>& indices, const K& c = K(1)) {
    ExtElement e(n);
    auto m = ExtMonomial::from_indices(indices);
    if (!indices.empty() && indices.back() > n) throw std::out_of_range("exterior index exceeds n");
    e.add(m, c);
    return e;
  }
  static ExtElement generator(int n, int i) { return monomial(n, {i}); }
  static ExtElement one(int n) { return monomial(n, {}); }

  int n() const { return n_; }
  const std::map<std::uint32_t, K>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(ExtMonomial m, const K& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m.support, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Common support size of all terms, or nullopt when inhomogeneous or zero.
  std::optional<int> homogeneous_size() const {
    if (terms_.empty()) return std::nullopt;
    int k = std::popcount(terms_.begin()->first);
    for (const auto& [s, c] : terms_)
      if (std::popcount(s) != k) return std::nullopt;
    return k;
  }

  ExtElement operator-() const {
    ExtElement r(n_);
    for (const auto& [s, c] : terms_) r.terms_.emplace(s, -c);
    return r;
  }
  ExtElement& operator+=(const ExtElement& o) {
    check(o);
    for (const auto& [s, c] : o.terms_) add(ExtMonomial{s}, c);
    return *this;
  }
  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a += -b; }
  friend ExtElement operator*(const K& s, const ExtElement& a) {
    ExtElement r(a.n_);
    for (const auto& [m, c] : a.terms_) r.add(ExtMonomial{m}, s * c);
    return r;
  }
  friend ExtElement operator*(const ExtElement& a, const ExtElement& b) {
    a.check(b);
    ExtElement r(a.n_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        if (auto prod = ext_mul(ExtMonomial{ma}, ExtMonomial{mb}))
          r.add(prod->monomial, prod->sign > 0 ? ca * cb : -(ca * cb));
    return r;
  }
  friend bool operator==(const ExtElement& a, const ExtElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += c.to_string();
      for (int i : ExtMonomial{s}.indices()) out += "*e" + std::to_string(i);
    }
    return out;
  }

 private:
  void check(const ExtElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("exterior elements over different algebras");
  }
  int n_ = 0;
  std::map<std::uint32_t, K> terms_;
};

template <Field K>
using ExtMatrix = SparseMatrix<ExtElement<K>>;

}  // namespace subcx
