#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "oracles.hpp"

using namespace zeck;

TEST_CASE("scan rows", "[cli]") {
  auto pair = SystemPair::create(validate_list({1, 0}), validate_list({1, 1}));
  auto k = derived_constants(pair);
  std::ostringstream out;
  write_scan_csv(out, pair, k, BigInt(1), BigInt(2), BigInt(1));
  CHECK(out.str() == "x,z,ratio\n1,1,1\n");

  std::vector<ScanRow> rows;
  scan(pair, k, BigInt(10), BigInt(100), BigInt(7), [&](const ScanRow& r) { rows.push_back(r); });
  REQUIRE(rows.size() == 13);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].x > rows[i - 1].x);
  for (const auto& r : rows) CHECK(r.ratio > 0);

  CHECK_THROWS_AS(scan(pair, k, BigInt(5), BigInt(5), BigInt(1), [](const ScanRow&) {}), error);
  CHECK_THROWS_AS(scan(pair, k, BigInt(0), BigInt(5), BigInt(1), [](const ScanRow&) {}), error);
  CHECK_THROWS_AS(scan(pair, k, BigInt(1), BigInt(5), BigInt(0), [](const ScanRow&) {}), error);

  // same bytes twice
  std::ostringstream a, b;
  write_scan_csv(a, pair, k, BigInt(1000), BigInt(1400), BigInt(3));
  write_scan_csv(b, pair, k, BigInt(1000), BigInt(1400), BigInt(3));
  CHECK(a.str() == b.str());
}

TEST_CASE("ratio at a power of two sits near the lower envelope", "[cli]") {
  auto pair = SystemPair::create(validate_list({1, 0}), validate_list({1, 1}));
  auto r = extremes(pair);
  pair.H_sup().extend_to(20);
  BigInt x = pair.H_sup()[20];
  double ratio = envelope_ratio(z_count(pair, x), x, r.constants.gamma);
  CHECK(std::fabs(ratio - r.liminf) < 0.01 * r.liminf);
}

TEST_CASE("histogram", "[cli]") {
  {
    std::istringstream in("x,z,ratio\n1,1,1\n");
    auto bins = stats(in, 1);
    REQUIRE(bins.size() == 1);
    CHECK(bins[0].count == 1);
    CHECK(bins[0].cdf == 1);
  }
  {
    std::istringstream in("x,z,ratio\n");
    try {
      stats(in, 4);
      FAIL("expected EmptyInput");
    } catch (const error& e) {
      CHECK(e.code() == errc::empty_input);
    }
  }
  {
    // uniform ratios spread evenly
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(1.0, 2.0);
    std::ostringstream csv;
    csv << "x,z,ratio\n";
    const int n = 100000;
    for (int i = 0; i < n; ++i) csv << i + 1 << ",0," << format_real(u(rng), 17) << '\n';
    std::istringstream in(csv.str());
    auto bins = stats(in, 20);
    std::size_t total = 0;
    double prev = 0;
    for (const auto& b : bins) {
      total += b.count;
      CHECK(b.cdf >= prev);
      prev = b.cdf;
      CHECK(std::fabs(static_cast<double>(b.count) - n / 20.0) < 0.05 * n / 20.0);
    }
    CHECK(total == static_cast<std::size_t>(n));
    CHECK(bins.back().cdf == 1);
  }
  {
    std::istringstream in("x,z,ratio\n1,1,abc\n");
    CHECK_THROWS_AS(stats(in, 3), error);
  }
}

TEST_CASE("scan feeds stats", "[cli]") {
  auto pair = SystemPair::create(validate_list({1, 0}), validate_list({1, 1}));
  auto k = derived_constants(pair);
  std::stringstream csv;
  write_scan_csv(csv, pair, k, BigInt(262144), BigInt(349525), BigInt(1));
  auto bins = stats(csv, 200);
  std::size_t total = 0;
  for (const auto& b : bins) total += b.count;
  CHECK(total == 349525 - 262144);
}

TEST_CASE("verify report", "[cli]") {
  auto pair = SystemPair::create(validate_list({1, 0}), validate_list({1, 1}));
  auto rep = verify(pair, 2000);
  for (const auto& c : rep.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.ok);
  }
  CHECK(rep.ok());
  CHECK(rep.checks.size() == 7);
  CHECK(verify(pair, 1).ok());
  CHECK_THROWS_AS(verify(pair, 0), error);
}

TEST_CASE("float formatting", "[cli]") {
  CHECK(format_real(2.0 / 3) == "0.666666666667");
  CHECK(format_real(1e-20) == "1e-20");
  CHECK(format_real(1.0) == "1");
}
