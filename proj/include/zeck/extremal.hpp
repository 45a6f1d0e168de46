#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "zeck/spectra.hpp"

namespace zeck {

/// prefix alone, or prefix + bar-beta^{tail_index} (the maximal tail starting at tail_index).
struct StarCandidate {
  CoeffFn prefix;
  std::optional<index_t> tail_index;

  std::string to_string() const {
    std::string s = format_sparse(prefix);
    if (tail_index) s += "+tail@" + std::to_string(*tail_index);
    return s;
  }

  friend bool operator==(const StarCandidate&, const StarCandidate&) = default;
};

/// Bottom-up scan into proper L*-blocks, each ending strictly below the pattern.
/// With `exact_end` the blocks must partition [1, exact_end]; otherwise the last block
/// may run past ord(eps) through zeros (a finite member).
inline bool is_star_decomposable(const ListSpec& L, const CoeffFn& eps, std::optional<index_t> exact_end = {}) {
  const index_t top = exact_end.value_or(eps.ord());
  if (eps.ord() > top) return false;
  for (index_t k = 1; k <= top; ++k) {
    for (std::size_t off = 0;; ++off, ++k) {
      const digit_t pat = L.pattern(off);
      const digit_t v = eps[k];
      if (v > pat) return false;
      if (v < pat) break;
      if (exact_end && k == top) return false;
    }
  }
  return true;
}

inline void validate_candidate(const ListSpec& L, const StarCandidate& c) {
  if (c.tail_index) {
    const index_t b = *c.tail_index - 1;
    if (*c.tail_index == 0) throw error(errc::invalid_candidate, "tail index must be >= 1");
    if (b == 0) {
      if (!c.prefix.is_zero()) throw error(errc::invalid_candidate, "tail at 1 leaves no room for a prefix");
      return;
    }
    if (!is_star_decomposable(L, c.prefix, b))
      throw error(errc::invalid_candidate, c.to_string() + ": prefix does not partition [1," + std::to_string(b) + "]");
  } else {
    if (c.prefix.is_zero()) throw error(errc::invalid_candidate, "empty candidate");
    if (!is_star_decomposable(L, c.prefix))
      throw error(errc::invalid_candidate, c.to_string() + ": not a finite L* member");
  }
  if (c.prefix[1] < 1) throw error(errc::invalid_candidate, c.to_string() + ": first digit must be >= 1");
}

inline double delta_star(const SystemPair& pair, const StarCandidate& c, const SpectralConstants& k) {
  validate_candidate(pair.sub(), c);
  double num = 0, base = 0;
  for (index_t i = 1; i <= c.prefix.ord(); ++i) {
    if (!c.prefix[i]) continue;
    num += c.prefix[i] * std::pow(k.omega, static_cast<double>(i));
    base += c.prefix[i] * std::pow(k.omega_sup, static_cast<double>(i));
  }
  if (c.tail_index) {
    const double b = static_cast<double>(*c.tail_index - 1);
    num += std::pow(k.omega, b);
    base += k.rho * std::pow(k.omega_sup, b);
  }
  return num / std::pow(base, k.gamma);
}

/// C_0..C_{n_max}: number of L*-block decompositions partitioning [1,n].
inline std::vector<BigInt> count_Cn(const ListSpec& L, std::size_t n_max) {
  const std::size_t N = L.size();
  std::vector<BigInt> C(n_max + 1);
  C[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n <= N) {
      for (std::size_t j = 1; j <= n; ++j) C[n] += BigInt(L[j]) * C[n - j];
    } else {
      for (std::size_t k = 1; k < N; ++k) C[n] += BigInt(L[k]) * C[n - k];
      C[n] += BigInt(1 + static_cast<unsigned long long>(L[N])) * C[n - N];
    }
  }
  return C;
}

/// (sum C_n x^n) * (1 - sum e_k x^k - (1+e_N) x^N) == 1 - x^N through x^degree.
inline bool generating_identity_check(const ListSpec& L, std::size_t degree) {
  const std::size_t N = L.size();
  if (degree < N) throw error(errc::usage_error, "degree must be >= N");
  const auto C = count_Cn(L, degree);
  std::vector<BigInt> f(N + 1);
  f[0] = 1;
  for (std::size_t k = 1; k < N; ++k) f[k] = -BigInt(L[k]);
  f[N] = -BigInt(1 + static_cast<unsigned long long>(L[N]));
  for (std::size_t d = 0; d <= degree; ++d) {
    BigInt s;
    for (std::size_t k = 0; k <= std::min(d, N); ++k) s += f[k] * C[d - k];
    const BigInt want = d == 0 ? BigInt(1) : d == N ? BigInt(-1) : BigInt(0);
    if (s != want) return false;
  }
  return true;
}

struct MeasureSum {
  double partial;
  double tail_bound;
};

/// (1 - rho) sum_{b=0}^{terms} C_b w~^b, plus a geometric bound on the rest.
inline MeasureSum measure_check(const SystemPair& pair, const SpectralConstants& k, std::size_t terms) {
  const auto C = count_Cn(pair.sub(), terms);
  double s = 0;
  for (std::size_t b = 0; b <= terms; ++b) s += to_double(C[b]) * std::pow(k.omega_sup, static_cast<double>(b));
  // C_b <= c * phi^b with c = max C_b / phi^b seen so far
  double c = 0;
  for (std::size_t b = 0; b <= terms; ++b) c = std::max(c, to_double(C[b]) / std::pow(k.phi, static_cast<double>(b)));
  const double r = k.phi * k.omega_sup;
  const double tail = c * std::pow(r, static_cast<double>(terms + 1)) / (1 - r);
  return {(1 - k.rho) * s, (1 - k.rho) * tail};
}

/// All digit vectors whose L*-blocks partition [1,b] exactly.
inline std::vector<CoeffFn> star_prefixes(const ListSpec& L, index_t b) {
  std::vector<CoeffFn> out;
  std::vector<digit_t> d(b, 0);
  std::function<void(index_t)> rec = [&](index_t start) {
    if (start == b + 1) {
      out.push_back(CoeffFn::from_digits(d));
      return;
    }
    // block [start, start+m-1]: pattern below the end, anything smaller at the end
    for (index_t m = 1; start + m - 1 <= b; ++m) {
      const index_t end = start + m - 1;
      for (index_t i = start; i < end; ++i) d[i - 1] = L.pattern(i - start);
      const digit_t top = L.pattern(m - 1);
      for (digit_t v = 0; v < top; ++v) {
        d[end - 1] = v;
        rec(end + 1);
      }
    }
    for (index_t i = start; i <= b; ++i) d[i - 1] = 0;
  };
  rec(1);
  return out;
}

inline constexpr std::size_t max_extremal_candidates = 5'000'000;

struct ScoredCandidate {
  StarCandidate candidate;
  double delta;
  double scaled;
};

struct ExtremalReport {
  SpectralConstants constants;
  std::size_t max_tail_bound;   // tails tried at 1..this
  std::size_t min_support_bound;  // finite candidates within [1, this]
  std::vector<ScoredCandidate> max_candidates;
  std::vector<ScoredCandidate> min_candidates;
  ScoredCandidate max, min;
  double limsup, liminf;
};

inline ExtremalReport extremes(const SystemPair& pair, const SpectralConstants& k) {
  const ListSpec& L = pair.sub();
  ExtremalReport r{};
  r.constants = k;
  const double scale = k.alpha / std::pow(k.alpha_sup, k.gamma);
  auto score = [&](StarCandidate c) {
    double d = delta_star(pair, c, k);
    return ScoredCandidate{std::move(c), d, d * scale};
  };

  r.max_tail_bound = static_cast<std::size_t>(std::ceil(std::max(2.0, k.p_star)));
  {
    const auto C = count_Cn(L, r.max_tail_bound);
    BigInt total = std::accumulate(C.begin(), C.end(), BigInt(0));
    if (total > max_extremal_candidates)
      throw error(errc::usage_error, "tail bound " + std::to_string(r.max_tail_bound) + " needs " + total.str() +
                                         " candidates; exhaustive search is capped at " +
                                         std::to_string(max_extremal_candidates));
  }
  r.max_candidates.push_back(score({CoeffFn{}, index_t{1}}));
  for (index_t l = 2; l <= r.max_tail_bound; ++l)
    for (auto& pre : star_prefixes(L, l - 1))
      if (pre[1] >= 1) r.max_candidates.push_back(score({std::move(pre), l}));

  r.min_support_bound = static_cast<std::size_t>(k.p_dagger - 1);
  {
    const std::size_t b = r.min_support_bound;
    const digit_t cap = L.max_entry();
    std::vector<digit_t> d(b, 0);
    std::function<void(index_t)> rec = [&](index_t i) {
      if (i > b) {
        CoeffFn f = CoeffFn::from_digits(d);
        if (f[1] >= 1 && is_star_decomposable(L, f)) r.min_candidates.push_back(score({std::move(f), std::nullopt}));
        return;
      }
      for (digit_t v = 0; v <= cap; ++v) {
        d[i - 1] = v;
        rec(i + 1);
      }
      d[i - 1] = 0;
    };
    rec(1);
  }

  auto by_name = [](const ScoredCandidate& a, const ScoredCandidate& b) {
    return a.candidate.to_string() < b.candidate.to_string();
  };
  std::sort(r.max_candidates.begin(), r.max_candidates.end(), by_name);
  std::sort(r.min_candidates.begin(), r.min_candidates.end(), by_name);

  r.max = *std::max_element(r.max_candidates.begin(), r.max_candidates.end(),
                            [](const auto& a, const auto& b) { return a.delta < b.delta; });
  r.min = *std::min_element(r.min_candidates.begin(), r.min_candidates.end(),
                            [](const auto& a, const auto& b) { return a.delta < b.delta; });
  r.limsup = r.max.scaled;
  r.liminf = r.min.scaled;
  return r;
}

inline ExtremalReport extremes(const SystemPair& pair) { return extremes(pair, derived_constants(pair)); }

}  // namespace zeck
