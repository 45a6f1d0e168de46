#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "zeck/duality.hpp"

namespace zeck {

/// Integer coefficients, lowest degree first.
struct Polynomial {
  std::vector<std::int64_t> coeffs;

  std::size_t degree() const { return coeffs.size() - 1; }

  double operator()(double x) const {
    double v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + static_cast<double>(*it);
    return v;
  }

  double derivative(double x) const {
    double v = 0;
    for (std::size_t k = coeffs.size() - 1; k >= 1; --k) v = v * x + static_cast<double>(k) * static_cast<double>(coeffs[k]);
    return v;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// x^N - e_1 x^{N-1} - ... - e_{N-1} x - (1 + e_N)
inline Polynomial char_poly(const ListSpec& L) {
  const std::size_t N = L.size();
  Polynomial f;
  f.coeffs.assign(N + 1, 0);
  f.coeffs[N] = 1;
  for (index_t k = 1; k < N; ++k) f.coeffs[N - k] = -static_cast<std::int64_t>(L[k]);
  f.coeffs[0] = -(1 + static_cast<std::int64_t>(L[N]));
  return f;
}

/// Positive root: bisection on [1, 2 + sum of |lower coefficients|], then Newton.
inline double dominant_root(const Polynomial& f) {
  double lo = 1.0;
  double hi = 1.0;
  for (std::size_t k = 0; k + 1 < f.coeffs.size(); ++k) hi += std::fabs(static_cast<double>(f.coeffs[k]));
  hi += 1.0;
  if (!(f(lo) < 0 && f(hi) > 0)) throw error(errc::no_sign_change, "no sign change on [1, " + std::to_string(hi) + "]");
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) {
    double d = f.derivative(x);
    if (d == 0) break;
    double nx = x - f(x) / d;
    if (!(nx >= lo && nx <= hi)) break;
    x = nx;
  }
  return x;
}

/// lim H_n / phi^{n-1}, via the coefficients of f(x)/(x - phi).
inline double alpha_constant(const ListSpec& L, const FundamentalSequence& H, double phi) {
  const Polynomial f = char_poly(L);
  const std::size_t N = f.degree();
  // synthetic division, top coefficient first
  std::vector<double> g(N);
  double carry = 0;
  for (std::size_t k = N; k >= 1; --k) {
    carry = carry * phi + static_cast<double>(f.coeffs[k]);
    g[k - 1] = carry;
  }
  double s = 0;
  for (index_t k = 1; k <= N; ++k) s += to_double(H[k]) * g[k - 1];
  return s / f.derivative(phi);
}

struct SpectralConstants {
  double phi, phi_sup;
  double omega, omega_sup;
  double gamma;
  double alpha, alpha_sup;
  double rho;
  int p;
  double p_star;
  int p_dagger;
};

/// (sum_k e_k w^k) / (1 - w^N) for the entries of L.
inline double tail_value(const ListSpec& L, double w) {
  double s = 0;
  for (index_t k = 1; k <= L.size(); ++k) s += L[k] * std::pow(w, static_cast<double>(k));
  return s / (1 - std::pow(w, static_cast<double>(L.size())));
}

inline SpectralConstants derived_constants(const SystemPair& pair) {
  const ListSpec& L = pair.sub();
  SpectralConstants c{};
  c.phi = dominant_root(char_poly(L));
  c.phi_sup = dominant_root(char_poly(pair.sup()));
  if (!(1 < c.phi && c.phi < c.phi_sup))
    throw error(errc::internal_inconsistency, "expected 1 < phi < phi_sup");
  c.omega = 1 / c.phi;
  c.omega_sup = 1 / c.phi_sup;
  c.gamma = std::log(c.phi) / std::log(c.phi_sup);
  c.alpha = alpha_constant(L, pair.H(), c.phi);
  c.alpha_sup = alpha_constant(pair.sup(), pair.H_sup(), c.phi_sup);
  c.rho = tail_value(L, c.omega_sup);
  c.p = 1;
  while (!(c.gamma * std::pow(c.omega_sup, c.p - 1) < std::pow(c.omega, c.p))) {
    if (++c.p > 100000) throw error(errc::internal_inconsistency, "p search did not terminate");
  }
  const double N = static_cast<double>(L.size());
  c.p_star = c.p + 1 +
             (N * std::log(c.phi) + std::log(1 - c.rho + std::pow(c.omega_sup, N))) / (std::log(c.phi_sup) - std::log(c.phi));
  c.p_dagger = std::max(2, c.p);
  return c;
}

}  // namespace zeck
