#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zeck/numeration.hpp"

namespace zeck {

inline std::size_t default_subcollection_depth(const ListSpec& sub, const ListSpec& sup) {
  return 2 * sub.size() * sup.size() + 2;
}

/// theta^n of the sub list is an L_sup member for every 2 <= n <= depth.
inline bool check_subcollection(const ListSpec& sub, const ListSpec& sup, std::optional<std::size_t> depth = {}) {
  const std::size_t d = depth.value_or(default_subcollection_depth(sub, sup));
  for (index_t n = 2; n <= d; ++n)
    if (!is_member(sup, theta_hat(sub, n))) return false;
  return true;
}

/// Same collection when the infinite patterns agree (covers duplicated periods).
inline bool same_collection(const ListSpec& a, const ListSpec& b) {
  const std::size_t span = a.size() * b.size();
  for (std::size_t j = 0; j < span; ++j)
    if (a.pattern(j) != b.pattern(j)) return false;
  return true;
}

class SystemPair {
 public:
  static SystemPair create(const ListSpec& sub, const ListSpec& sup, std::optional<std::size_t> depth = {}) {
    if (!check_subcollection(sub, sup, depth))
      throw error(errc::not_a_subcollection,
                  "(" + sub.to_string() + ") does not define a subcollection of (" + sup.to_string() + ")");
    if (same_collection(sub, sup))
      throw error(errc::not_a_subcollection, "(" + sub.to_string() + ") and (" + sup.to_string() + ") define the same collection");
    SystemPair p(sub, sup);
    const std::size_t n = std::max(sub.size(), sup.size()) + 1;
    p.H_.extend_to(n);
    p.H_sup_.extend_to(n);
    return p;
  }

  const ListSpec& sub() const { return H_.list(); }
  const ListSpec& sup() const { return H_sup_.list(); }
  const FundamentalSequence& H() const { return H_; }
  const FundamentalSequence& H_sup() const { return H_sup_; }
  FundamentalSequence& H() { return H_; }
  FundamentalSequence& H_sup() { return H_sup_; }

  /// Pre-extends both sequences so queries up to x need no growth.
  void reserve(const BigInt& x) {
    H_sup_.extend_past(x);
    H_.extend_to(H_sup_.size() + 1);
  }

 private:
  SystemPair(const ListSpec& sub, const ListSpec& sup) : H_(sub), H_sup_(sup) {}

  FundamentalSequence H_;
  FundamentalSequence H_sup_;
};

/// Least member of E that is >= mu in ascending order.
inline CoeffFn bar(const SystemPair& pair, const CoeffFn& mu) {
  if (!is_member(pair.sup(), mu))
    throw error(errc::not_in_super_collection, format_sparse(mu) + " is not in (" + pair.sup().to_string() + ")");
  auto scan = decompose_blocks(pair.sub(), mu);
  if (std::holds_alternative<BlockDecomposition>(scan)) return mu;
  const index_t t0 = std::get<NotMember>(scan).block_top;
  return CoeffFn::basis(t0 + 1) + mu.res_above(t0 + 1);
}

/// Count of n < x whose L_sup expansion lies in E.
inline BigInt z_count(const SystemPair& pair, const BigInt& x) {
  if (x < 1) throw error(errc::usage_error, "z is defined for x >= 1");
  CoeffFn mu = encode_greedy(pair.H_sup(), x);
  CoeffFn m = bar(pair, mu);
  if (m.ord() > pair.H().size()) throw error(errc::usage_error, "pair not reserved for x = " + x.str());
  return eval_int(m, pair.H());
}

inline BigInt z_count(SystemPair& pair, const BigInt& x) {
  if (x >= 1) pair.reserve(x);
  return z_count(std::as_const(pair), x);
}

inline BigInt brute_force_z(SystemPair& pair, const BigInt& x) {
  if (x < 1) throw error(errc::usage_error, "z is defined for x >= 1");
  pair.reserve(x);
  BigInt count;
  for (BigInt n = 0; n < x; ++n)
    if (is_member(pair.sub(), encode_greedy(std::as_const(pair.H_sup()), n))) ++count;
  return count;
}

/// z(1), ..., z(max_x) in one sweep.
inline std::vector<BigInt> brute_force_z_table(SystemPair& pair, std::size_t max_x) {
  std::vector<BigInt> z;
  z.reserve(max_x);
  if (max_x == 0) return z;
  pair.reserve(BigInt(max_x));
  BigInt count;
  for (std::size_t n = 0; n < max_x; ++n) {
    if (is_member(pair.sub(), encode_greedy(std::as_const(pair.H_sup()), BigInt(n)))) ++count;
    z.push_back(count);
  }
  return z;
}

}  // namespace zeck
