#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zeck/error.hpp"

namespace zeck {

using index_t = std::size_t;
using digit_t = std::uint32_t;

inline constexpr index_t infinite_order = std::numeric_limits<index_t>::max();

/// Digit list L = (e_1, ..., e_N). Only obtainable through validate_list.
class ListSpec {
 public:
  std::size_t size() const { return e_.size(); }
  /// 1-based entry e_k.
  digit_t operator[](index_t k) const { return e_[k - 1]; }
  /// Cyclic pattern value at offset j = 0, 1, ...: e_{(j mod N)+1}.
  digit_t pattern(std::size_t j) const { return e_[j % e_.size()]; }
  std::span<const digit_t> entries() const { return e_; }
  digit_t max_entry() const { return *std::max_element(e_.begin(), e_.end()); }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(e_[i]);
    }
    return s;
  }

  friend bool operator==(const ListSpec&, const ListSpec&) = default;

 private:
  explicit ListSpec(std::vector<digit_t> e) : e_(std::move(e)) {}
  friend ListSpec validate_list(std::span<const long long> entries);

  std::vector<digit_t> e_;
};

inline ListSpec validate_list(std::span<const long long> entries) {
  if (entries.size() < 2) throw error(errc::too_short, "a list needs at least two entries");
  std::vector<digit_t> e;
  e.reserve(entries.size());
  for (long long v : entries) {
    if (v < 0) throw error(errc::negative_entry, "entry " + std::to_string(v));
    if (v > std::numeric_limits<digit_t>::max()) throw error(errc::parse_error, "entry too large");
    e.push_back(static_cast<digit_t>(v));
  }
  if (e[0] == 0) throw error(errc::leading_zero, "e_1 must be positive");
  return ListSpec(std::move(e));
}

inline ListSpec validate_list(std::initializer_list<long long> entries) {
  return validate_list(std::span<const long long>(entries.begin(), entries.size()));
}

/// Parses "2,3,0".
inline ListSpec parse_list(std::string_view text) {
  std::vector<long long> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    if (tok.empty()) throw error(errc::parse_error, "empty list entry in '" + std::string(text) + "'");
    bool neg = tok.front() == '-';
    std::string_view digits = neg ? tok.substr(1) : tok;
    if (digits.empty() || digits.size() > 12 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw error(errc::parse_error, "bad list entry '" + std::string(tok) + "'");
    long long x = std::stoll(std::string(digits));
    v.push_back(neg ? -x : x);
    pos = comma + 1;
  }
  return validate_list(v);
}

/// Finite-support coefficient function, 1-based. Stored densely with trailing zeros trimmed.
class CoeffFn {
 public:
  CoeffFn() = default;

  /// digits[0] is index 1.
  static CoeffFn from_digits(std::vector<digit_t> digits) {
    CoeffFn f;
    f.d_ = std::move(digits);
    f.trim();
    return f;
  }

  /// beta^i
  static CoeffFn basis(index_t i, digit_t v = 1) {
    CoeffFn f;
    f.set(i, v);
    return f;
  }

  digit_t operator[](index_t k) const { return k >= 1 && k <= d_.size() ? d_[k - 1] : 0; }

  void set(index_t k, digit_t v) {
    if (k == 0) throw error(errc::usage_error, "coefficient indices start at 1");
    if (k > d_.size()) {
      if (v == 0) return;
      d_.resize(k, 0);
    }
    d_[k - 1] = v;
    trim();
  }

  index_t ord() const { return d_.size(); }

  index_t ord_star() const {
    for (index_t k = 0; k < d_.size(); ++k)
      if (d_[k]) return k + 1;
    return infinite_order;
  }

  bool is_zero() const { return d_.empty(); }
  std::span<const digit_t> digits() const { return d_; }

  /// res_m: keep indices < m.
  CoeffFn res_below(index_t m) const {
    CoeffFn f;
    f.d_.assign(d_.begin(), d_.begin() + std::min<index_t>(d_.size(), m ? m - 1 : 0));
    f.trim();
    return f;
  }

  /// res^m: keep indices >= m.
  CoeffFn res_above(index_t m) const {
    CoeffFn f = *this;
    for (index_t k = 1; k < m && k <= f.d_.size(); ++k) f.d_[k - 1] = 0;
    f.trim();
    return f;
  }

  /// rev_n: index k <-> n+1-k on [1,n]; entries above n dropped.
  CoeffFn rev(index_t n) const {
    CoeffFn f;
    f.d_.assign(n, 0);
    for (index_t k = 1; k <= n; ++k) f.d_[n - k] = (*this)[k];
    f.trim();
    return f;
  }

  CoeffFn& operator+=(const CoeffFn& o) {
    if (o.d_.size() > d_.size()) d_.resize(o.d_.size(), 0);
    for (index_t k = 0; k < o.d_.size(); ++k) d_[k] += o.d_[k];
    return *this;
  }
  friend CoeffFn operator+(CoeffFn a, const CoeffFn& b) { return a += b; }

  friend bool operator==(const CoeffFn&, const CoeffFn&) = default;

 private:
  void trim() {
    while (!d_.empty() && d_.back() == 0) d_.pop_back();
  }

  std::vector<digit_t> d_;
};

/// Sparse "i:v,i:v" ascending; the zero function prints as "0".
inline std::string format_sparse(const CoeffFn& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (index_t k = 1; k <= f.ord(); ++k) {
    if (!f[k]) continue;
    if (!s.empty()) s += ',';
    s += std::to_string(k) + ':' + std::to_string(f[k]);
  }
  return s;
}

inline CoeffFn parse_sparse(std::string_view text) {
  if (text == "0" || text.empty()) return {};
  CoeffFn f;
  index_t last = 0;
  std::size_t pos = 0;
  auto number = [&](std::string_view tok) -> unsigned long long {
    if (tok.empty() || tok.size() > 18 ||
        !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw error(errc::parse_error, "bad digit token '" + std::string(tok) + "'");
    return std::stoull(std::string(tok));
  };
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view pair = text.substr(pos, comma - pos);
    std::size_t colon = pair.find(':');
    if (colon == std::string_view::npos) throw error(errc::parse_error, "expected i:v, got '" + std::string(pair) + "'");
    auto i = number(pair.substr(0, colon));
    auto v = number(pair.substr(colon + 1));
    if (i == 0 || i <= last) throw error(errc::parse_error, "indices must be ascending and >= 1");
    if (v > std::numeric_limits<digit_t>::max()) throw error(errc::parse_error, "digit too large");
    f.set(i, static_cast<digit_t>(v));
    last = i;
    pos = comma + 1;
  }
  return f;
}

/// theta^n: predecessor of beta^n, entry at k is e_{((n-1-k) mod N)+1}.
inline CoeffFn theta_hat(const ListSpec& L, index_t n) {
  if (n < 2) throw error(errc::usage_error, "theta_hat needs n >= 2");
  std::vector<digit_t> d(n - 1);
  for (index_t k = 1; k <= n - 1; ++k) d[k - 1] = L.pattern(n - 1 - k);
  return CoeffFn::from_digits(std::move(d));
}

/// Ascending order: decided at the largest index where the two differ.
inline std::strong_ordering cmp_asc(const CoeffFn& a, const CoeffFn& b) {
  for (index_t k = std::max(a.ord(), b.ord()); k >= 1; --k) {
    if (a[k] != b[k]) return a[k] <=> b[k];
  }
  return std::strong_ordering::equal;
}

struct Block {
  index_t lo;
  index_t hi;
  bool maximal;  // pattern matched all the way down to index 1
};

struct BlockDecomposition {
  std::vector<Block> blocks;  // top-down

  CoeffFn reassemble(const CoeffFn& source) const {
    CoeffFn f;
    for (const auto& b : blocks)
      for (index_t k = b.lo; k <= b.hi; ++k) f.set(k, source[k]);
    return f;
  }
};

struct NotMember {
  index_t failing_index;
  index_t block_top;
};

using BlockScan = std::variant<BlockDecomposition, NotMember>;

/// Single top-down pass; a block can only end where the digit drops below the pattern.
inline BlockScan decompose_blocks(const ListSpec& L, const CoeffFn& eps) {
  BlockDecomposition out;
  index_t t = eps.ord();
  while (t >= 1) {
    index_t j = t;
    for (std::size_t off = 0;; ++off, --j) {
      digit_t pat = L.pattern(off);
      digit_t v = eps[j];
      if (v > pat) return NotMember{j, t};
      if (v < pat) {
        out.blocks.push_back({j, t, false});
        t = j - 1;
        break;
      }
      if (j == 1) {
        out.blocks.push_back({1, t, true});
        t = 0;
        break;
      }
    }
  }
  return out;
}

inline bool is_member(const ListSpec& L, const CoeffFn& eps) {
  return std::holds_alternative<BlockDecomposition>(decompose_blocks(L, eps));
}

}  // namespace zeck
