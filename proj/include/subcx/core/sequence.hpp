#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace subcx {

/// Finite sequence of non-negative integers. Tagged so rank sequences of
/// complexes and Hilbert functions of exterior modules do not mix silently.
template <class Tag>
class IntSequence {
 public:
  IntSequence() = default;
  IntSequence(std::initializer_list<int> v) : v_(v) { validate(); }
  explicit IntSequence(std::vector<int> v) : v_(std::move(v)) { validate(); }

  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  int operator[](std::size_t i) const { return i < v_.size() ? v_[i] : 0; }
  const std::vector<int>& values() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  bool is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
  }

  /// Zero-padded (or zero-trimmed) copy of length n; throws if trimming drops a nonzero entry.
  IntSequence padded(std::size_t n) const {
    std::vector<int> out(n, 0);
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i < n) out[i] = v_[i];
      else if (v_[i] != 0) throw std::invalid_argument("sequence " + to_string() + " longer than " + std::to_string(n));
    }
    return IntSequence(std::move(out));
  }

  /// Length after dropping trailing zeros.
  std::size_t support_length() const {
    std::size_t n = v_.size();
    while (n > 0 && v_[n - 1] == 0) --n;
    return n;
  }

  IntSequence& operator+=(const IntSequence& o) {
    if (o.v_.size() > v_.size()) v_.resize(o.v_.size(), 0);
    for (std::size_t i = 0; i < o.v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  friend IntSequence operator+(IntSequence a, const IntSequence& b) { return a += b; }

  /// Equality ignores trailing zeros: (1,2,1) == (1,2,1,0).
  friend bool operator==(const IntSequence& a, const IntSequence& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return false;
    return true;
  }
  /// Lexicographic on the zero-padded sequences; consistent with ==.
  friend bool operator<(const IntSequence& a, const IntSequence& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }

  bool entrywise_le(const IntSequence& o) const {
    std::size_t n = std::max(size(), o.size());
    for (std::size_t i = 0; i < n; ++i)
      if ((*this)[i] > o[i]) return false;
    return true;
  }

  /// "(1,2,1)"
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < v_.size(); ++i) s += (i ? "," : "") + std::to_string(v_[i]);
    return s + ")";
  }

 private:
  void validate() const {
    for (int x : v_)
      if (x < 0) throw std::invalid_argument("sequence entries must be non-negative");
  }
  std::vector<int> v_;
};

struct RankTag {};
struct HilbertTag {};

/// r = (r_0, r_1, ...), index = homological position, r_0 at the augmentation end.
using RankSequence = IntSequence<RankTag>;
/// h = (h_0, h_1, ...), h_i = dim of the degree (origin - i) piece.
using HilbertFunction = IntSequence<HilbertTag>;

/// Parses "1,4,4,1,0" (parentheses optional).
inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    std::string t;
    for (char c : cur)
      if (c != ' ' && c != '(' && c != ')') t += c;
    if (!t.empty()) {
      std::size_t used = 0;
      int v = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument("bad integer '" + t + "'");
      out.push_back(v);
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') flush();
    else cur += c;
  }
  flush();
  return out;
}

}  // namespace subcx
