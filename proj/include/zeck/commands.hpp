#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "zeck/extremal.hpp"

namespace zeck {

/// Print precision: 12 significant digits unless ZECK_FLOAT_DIGITS says otherwise.
inline int float_digits() {
  if (const char* env = std::getenv("ZECK_FLOAT_DIGITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 17) return static_cast<int>(v);
  }
  return 12;
}

inline std::string format_real(double v, int digits = float_digits()) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

struct ScanRow {
  BigInt x;
  BigInt z;
  double ratio;
};

/// z(x)/x^gamma, computed in logs so huge x stays finite.
inline double envelope_ratio(const BigInt& z, const BigInt& x, double gamma) {
  return std::exp(std::log(to_double(z)) - gamma * std::log(to_double(x)));
}

/// Rows for x = from, from+step, ... < to, handed to `sink` in order.
inline void scan(SystemPair& pair, const SpectralConstants& k, const BigInt& from, const BigInt& to, const BigInt& step,
                 const std::function<void(const ScanRow&)>& sink) {
  if (from < 1 || to <= from || step < 1) throw error(errc::usage_error, "scan needs 1 <= from < to and step >= 1");
  pair.reserve(to);
  const SystemPair& frozen = pair;
  for (BigInt x = from; x < to; x += step) {
    BigInt z = z_count(frozen, x);
    double r = envelope_ratio(z, x, k.gamma);
    sink(ScanRow{x, std::move(z), r});
  }
}

inline void write_scan_csv(std::ostream& out, SystemPair& pair, const SpectralConstants& k, const BigInt& from,
                           const BigInt& to, const BigInt& step) {
  out << "x,z,ratio\n";
  const int digits = float_digits();
  scan(pair, k, from, to, step, [&](const ScanRow& r) { out << r.x << ',' << r.z << ',' << format_real(r.ratio, digits) << '\n'; });
}

struct HistogramBin {
  double lo, hi;
  std::size_t count;
  double cdf;
};

/// Ratio column of a scan CSV (header optional). Calls `each` per value.
inline void read_ratios(std::istream& in, const std::function<void(double)>& each) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line.rfind("x,", 0) == 0) continue;
    const auto comma = line.rfind(',');
    const std::string field = comma == std::string::npos ? line : line.substr(comma + 1);
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0' || !std::isfinite(v))
      throw error(errc::parse_error, "line " + std::to_string(lineno) + ": bad ratio '" + field + "'");
    each(v);
  }
}

/// Two passes over a seekable stream: range, then counts. Memory is O(bins).
inline std::vector<HistogramBin> stats(std::istream& in, std::size_t bins) {
  if (bins < 1) throw error(errc::usage_error, "bins must be >= 1");
  const auto start = in.tellg();
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  std::size_t n = 0;
  read_ratios(in, [&](double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    ++n;
  });
  if (n == 0) throw error(errc::empty_input, "no rows to bin");
  in.clear();
  in.seekg(start);
  if (!in) throw error(errc::usage_error, "stats input is not seekable");

  std::vector<std::size_t> counts(bins, 0);
  const double width = (hi - lo) / static_cast<double>(bins);
  read_ratios(in, [&](double v) {
    std::size_t i = width > 0 ? static_cast<std::size_t>((v - lo) / width) : 0;
    counts[std::min(i, bins - 1)] += 1;
  });

  std::vector<HistogramBin> out;
  std::size_t running = 0;
  for (std::size_t i = 0; i < bins; ++i) {
    running += counts[i];
    const double blo = lo + width * static_cast<double>(i);
    const double bhi = i + 1 == bins ? hi : lo + width * static_cast<double>(i + 1);
    out.push_back({blo, bhi, counts[i], static_cast<double>(running) / static_cast<double>(n)});
  }
  return out;
}

inline void write_stats_csv(std::ostream& out, const std::vector<HistogramBin>& bins) {
  const int digits = float_digits();
  out << "bin_lo,bin_hi,count,cdf\n";
  for (const auto& b : bins)
    out << format_real(b.lo, digits) << ',' << format_real(b.hi, digits) << ',' << b.count << ','
        << format_real(b.cdf, digits) << '\n';
}

struct CheckResult {
  std::string name;
  bool ok;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
  }
};

/// Duality vs enumeration for x <= max_x, plus the numeric identities.
inline VerifyReport verify(SystemPair& pair, std::size_t max_x) {
  if (max_x < 1) throw error(errc::usage_error, "max-x must be >= 1");
  VerifyReport rep;
  auto add = [&](std::string name, bool ok, std::string detail) { rep.checks.push_back({std::move(name), ok, std::move(detail)}); };

  const auto table = brute_force_z_table(pair, max_x);
  {
    std::string bad;
    for (std::size_t x = 1; x <= max_x && bad.empty(); ++x) {
      BigInt z = z_count(std::as_const(pair), BigInt(x));
      if (z != table[x - 1])
        bad = "x=" + std::to_string(x) + " sub=(" + pair.sub().to_string() + ") super=(" + pair.sup().to_string() +
              ") duality=" + z.str() + " brute=" + table[x - 1].str();
    }
    add("duality", bad.empty(), bad.empty() ? "x=1.." + std::to_string(max_x) : bad);
  }
  {
    std::string bad;
    for (std::size_t x = 1; x < max_x && bad.empty(); ++x) {
      BigInt d = table[x] - table[x - 1];
      if (d != 0 && d != 1) bad = "z(" + std::to_string(x + 1) + ")-z(" + std::to_string(x) + ")=" + d.str();
    }
    add("monotone", bad.empty(), bad);
  }
  {
    std::string bad;
    for (const FundamentalSequence* H : {&pair.H(), &pair.H_sup()}) {
      FundamentalSequence seq = *H;
      seq.extend_past(BigInt(max_x));
      for (std::size_t n = 0; n < max_x && bad.empty(); ++n) {
        BigInt back = eval_int(encode_greedy(std::as_const(seq), BigInt(n)), std::as_const(seq));
        if (back != n) bad = "list (" + seq.list().to_string() + ") n=" + std::to_string(n) + " came back as " + back.str();
      }
    }
    add("round-trip", bad.empty(), bad);
  }
  add("generating-identity", generating_identity_check(pair.sub(), std::max<std::size_t>(50, pair.sub().size())),
      "degree 50");

  const SpectralConstants k = derived_constants(pair);
  {
    const auto m = measure_check(pair, k, 200);
    const double err = std::fabs(m.partial + m.tail_bound - 1);
    add("measure", err < 1e-6, "partial=" + format_real(m.partial) + " tail<=" + format_real(m.tail_bound));
  }
  {
    const double err = std::fabs(tail_value(pair.sub(), k.omega) - 1);
    add("normalization", err < 1e-10, "|err|=" + format_real(err));
  }
  {
    const double r1 = std::fabs(char_poly(pair.sub())(k.phi));
    const double r2 = std::fabs(char_poly(pair.sup())(k.phi_sup));
    add("root-residual", r1 < 1e-10 && r2 < 1e-10, "|f(phi)|=" + format_real(r1) + " |f~(phi~)|=" + format_real(r2));
  }
  return rep;
}

}  // namespace zeck
