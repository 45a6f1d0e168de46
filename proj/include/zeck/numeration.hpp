#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "zeck/bigint.hpp"
#include "zeck/collections.hpp"

namespace zeck {

/// H_1, H_2, ... for a list. Grows on demand; the const accessor never grows.
class FundamentalSequence {
 public:
  explicit FundamentalSequence(ListSpec L, std::size_t count = 1) : L_(std::move(L)) { extend_to(count); }

  const ListSpec& list() const { return L_; }
  std::size_t size() const { return h_.size(); }

  const BigInt& operator[](index_t n) const {
    if (n == 0 || n > h_.size())
      throw error(errc::usage_error, "H_" + std::to_string(n) + " not computed (have " + std::to_string(h_.size()) + ")");
    return h_[n - 1];
  }

  void extend_to(std::size_t count) {
    const std::size_t N = L_.size();
    while (h_.size() < count) {
      const index_t n = h_.size() + 1;
      BigInt v;
      if (n <= N) {
        // H_n = 1 + sum theta^n . H
        v = 1;
        for (index_t k = 1; k < n; ++k) v += BigInt(L_.pattern(n - 1 - k)) * h_[k - 1];
      } else {
        for (index_t k = 1; k < N; ++k) v += BigInt(L_[k]) * h_[n - k - 1];
        v += BigInt(1 + static_cast<unsigned long long>(L_[N])) * h_[n - N - 1];
      }
      h_.push_back(std::move(v));
    }
  }

  /// Grows until the last term exceeds x.
  void extend_past(const BigInt& x) {
    if (h_.empty()) extend_to(1);
    while (h_.back() <= x) extend_to(h_.size() + 1);
  }

  bool covers(const BigInt& x) const { return !h_.empty() && h_.back() > x; }

 private:
  ListSpec L_;
  std::vector<BigInt> h_;
};

inline FundamentalSequence fundamental_sequence(const ListSpec& L, std::size_t count) {
  if (count < 1) throw error(errc::usage_error, "count must be >= 1");
  return FundamentalSequence(L, count);
}

inline BigInt eval_int(const CoeffFn& eps, const FundamentalSequence& H) {
  BigInt s;
  for (index_t k = 1; k <= eps.ord(); ++k)
    if (eps[k]) s += BigInt(eps[k]) * H[k];
  return s;
}

inline BigInt eval_int(const CoeffFn& eps, FundamentalSequence& H) {
  H.extend_to(eps.ord());
  return eval_int(eps, std::as_const(H));
}

/// Greedy expansion, top index down. Each digit is floor(rem / H_k) capped by the
/// running block pattern: plain floor division overshoots e.g. 9 = 3*H_2 over (2,3,0).
/// H must already have a term above n.
inline CoeffFn encode_greedy(const FundamentalSequence& H, const BigInt& n) {
  if (n < 0) throw error(errc::usage_error, "cannot expand a negative integer");
  if (n == 0) return {};
  if (!H.covers(n)) throw error(errc::usage_error, "fundamental sequence too short for " + n.str());
  const ListSpec& L = H.list();
  index_t t = H.size();
  while (H[t] > n) --t;
  std::vector<digit_t> d(t, 0);
  BigInt rem = n;
  std::size_t off = 0;  // position inside the current block
  for (index_t k = t; k >= 1; --k) {
    const digit_t cap = L.pattern(off);
    digit_t v = 0;
    if (rem >= H[k]) {
      BigInt q = rem / H[k];
      v = q >= cap ? cap : q.convert_to<digit_t>();
      rem -= BigInt(v) * H[k];
    }
    d[k - 1] = v;
    off = v == cap ? off + 1 : 0;
  }
  CoeffFn eps = CoeffFn::from_digits(std::move(d));
  if (rem != 0 || !is_member(H.list(), eps))
    throw error(errc::internal_inconsistency, "greedy expansion of " + n.str() + " over (" + H.list().to_string() +
                                                   ") is not a member: " + format_sparse(eps));
  return eps;
}

inline CoeffFn encode_greedy(FundamentalSequence& H, const BigInt& n) {
  H.extend_past(n);
  return encode_greedy(std::as_const(H), n);
}

inline CoeffFn encode_greedy(const ListSpec& L, const BigInt& n) {
  FundamentalSequence H(L);
  return encode_greedy(H, n);
}

struct Expansion {
  CoeffFn digits;
  BigInt value;
};

/// Exhaustive: every digit vector bounded by max e_k below the first H_t >= max_value,
/// filtered by membership and sorted by value. Test-oracle sized inputs only.
inline std::vector<Expansion> enumerate_collection(const ListSpec& L, const BigInt& max_value) {
  std::vector<Expansion> out;
  if (max_value <= 0) return out;
  FundamentalSequence H(L);
  H.extend_past(max_value - 1);
  index_t t = 0;
  while (t < H.size() && H[t + 1] < max_value) ++t;
  const digit_t cap = L.max_entry();
  std::vector<digit_t> d(t, 0);
  std::function<void(index_t, const BigInt&)> rec = [&](index_t k, const BigInt& partial) {
    if (partial >= max_value) return;
    if (k == 0) {
      CoeffFn eps = CoeffFn::from_digits(d);
      if (is_member(L, eps)) out.push_back({std::move(eps), partial});
      return;
    }
    for (digit_t v = 0; v <= cap; ++v) {
      d[k - 1] = v;
      rec(k - 1, partial + BigInt(v) * H[k]);
    }
    d[k - 1] = 0;
  };
  rec(t, BigInt(0));
  std::sort(out.begin(), out.end(), [](const Expansion& a, const Expansion& b) { return a.value < b.value; });
  return out;
}

}  // namespace zeck
