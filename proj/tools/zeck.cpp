#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "zeck/zeck.hpp"

namespace {

using namespace zeck;

struct PairArgs {
  std::string sub, sup;
  void add_to(CLI::App* cmd) {
    cmd->add_option("--sub", sub, "digit list of the subcollection, e.g. 1,0")->required();
    cmd->add_option("--super", sup, "digit list of the super collection, e.g. 1,1")->required();
  }
  SystemPair make() const { return SystemPair::create(parse_list(sub), parse_list(sup)); }
};

std::string json_str(const std::string& s) { return "\"" + s + "\""; }

void print_info(const SystemPair& pair, const SpectralConstants& k) {
  const std::pair<const char*, std::string> rows[] = {
      {"phi", format_real(k.phi)},           {"phi_sup", format_real(k.phi_sup)},
      {"omega", format_real(k.omega)},       {"omega_sup", format_real(k.omega_sup)},
      {"gamma", format_real(k.gamma)},       {"alpha", format_real(k.alpha)},
      {"alpha_sup", format_real(k.alpha_sup)}, {"rho", format_real(k.rho)},
      {"p", std::to_string(k.p)},            {"p_star", format_real(k.p_star)},
      {"p_dagger", std::to_string(k.p_dagger)},
  };
  std::cout << "sub=" << pair.sub().to_string() << "\nsuper=" << pair.sup().to_string() << '\n';
  for (const auto& [key, v] : rows) std::cout << key << '=' << v << '\n';
  std::cout << "{\"sub\":" << json_str(pair.sub().to_string()) << ",\"super\":" << json_str(pair.sup().to_string());
  for (const auto& [key, v] : rows) std::cout << ",\"" << key << "\":" << v;
  std::cout << "}\n";
}

void print_extremes(const ExtremalReport& r, bool json) {
  if (json) {
    auto list = [](const std::vector<ScoredCandidate>& cs) {
      std::string s = "[";
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) s += ',';
        s += "{\"candidate\":" + json_str(cs[i].candidate.to_string()) + ",\"delta\":" + format_real(cs[i].delta) +
             ",\"scaled\":" + format_real(cs[i].scaled) + "}";
      }
      return s + "]";
    };
    std::cout << "{\"max_tail_bound\":" << r.max_tail_bound << ",\"min_support_bound\":" << r.min_support_bound
              << ",\"max_candidates\":" << list(r.max_candidates) << ",\"min_candidates\":" << list(r.min_candidates)
              << ",\"max_candidate\":" << json_str(r.max.candidate.to_string()) << ",\"delta_max\":" << format_real(r.max.delta)
              << ",\"min_candidate\":" << json_str(r.min.candidate.to_string()) << ",\"delta_min\":" << format_real(r.min.delta)
              << ",\"limsup\":" << format_real(r.limsup) << ",\"liminf\":" << format_real(r.liminf) << "}\n";
    return;
  }
  std::cout << "kind,candidate,delta,scaled\n";
  for (const auto& c : r.max_candidates)
    std::cout << "max," << c.candidate.to_string() << ',' << format_real(c.delta) << ',' << format_real(c.scaled) << '\n';
  for (const auto& c : r.min_candidates)
    std::cout << "min," << c.candidate.to_string() << ',' << format_real(c.delta) << ',' << format_real(c.scaled) << '\n';
  std::cout << "limsup=" << format_real(r.limsup) << " at " << r.max.candidate.to_string() << '\n'
            << "liminf=" << format_real(r.liminf) << " at " << r.min.candidate.to_string() << '\n';
}

// stdin cannot seek, so copy it to a temp file for the two passes
std::vector<HistogramBin> stats_from_stdin(std::size_t bins) {
  std::random_device rd;
  const auto path = std::filesystem::temp_directory_path() / ("zeck-stats-" + std::to_string(rd()) + ".csv");
  {
    std::ofstream tmp(path, std::ios::binary);
    tmp << std::cin.rdbuf();
  }
  std::vector<HistogramBin> out;
  try {
    std::ifstream in(path, std::ios::binary);
    out = stats(in, bins);
  } catch (...) {
    std::filesystem::remove(path);
    throw;
  }
  std::filesystem::remove(path);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"periodic Zeckendorf numeration: expansion, counting and envelope constants"};
  app.require_subcommand(1);

  std::string list_arg, n_arg;
  auto* expand = app.add_subcommand("expand", "greedy expansion of n");
  expand->add_option("--list", list_arg, "digit list, e.g. 2,3,0")->required();
  expand->add_option("n", n_arg, "non-negative integer")->required();

  PairArgs count_pair;
  std::string x_arg;
  bool brute = false;
  auto* count = app.add_subcommand("count", "z(x): integers below x whose super expansion lies in the subcollection");
  count_pair.add_to(count);
  count->add_option("--x", x_arg, "x >= 1")->required();
  count->add_flag("--brute", brute, "count by enumeration instead");

  PairArgs verify_pair;
  std::size_t max_x = 10000;
  auto* verify_cmd = app.add_subcommand("verify", "duality vs enumeration and the numeric identities");
  verify_pair.add_to(verify_cmd);
  verify_cmd->add_option("--max-x", max_x, "check every x in [1, max-x]")->capture_default_str();

  PairArgs info_pair;
  auto* info = app.add_subcommand("info", "spectral constants");
  info_pair.add_to(info);

  PairArgs ext_pair;
  bool json = false;
  auto* ext = app.add_subcommand("extremes", "candidate table and limsup/liminf of z(x)/x^gamma");
  ext_pair.add_to(ext);
  ext->add_flag("--json", json, "one JSON object");

  PairArgs scan_pair;
  std::string from_arg, to_arg, step_arg = "1";
  auto* scan_cmd = app.add_subcommand("scan", "CSV x,z,ratio for x in [from, to)");
  scan_pair.add_to(scan_cmd);
  scan_cmd->add_option("--from", from_arg)->required();
  scan_cmd->add_option("--to", to_arg)->required();
  scan_cmd->add_option("--step", step_arg)->capture_default_str();

  std::size_t bins = 200;
  std::string stats_in = "-";
  auto* stats_cmd = app.add_subcommand("stats", "histogram and cdf of the ratio column of a scan CSV");
  stats_cmd->add_option("--bins", bins)->capture_default_str();
  stats_cmd->add_option("input", stats_in, "scan CSV, - for stdin")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*expand) {
      std::cout << format_sparse(encode_greedy(parse_list(list_arg), parse_bigint(n_arg))) << '\n';
    } else if (*count) {
      SystemPair pair = count_pair.make();
      BigInt x = parse_bigint(x_arg);
      if (x < 1) throw error(errc::usage_error, "--x must be >= 1");
      std::cout << (brute ? brute_force_z(pair, x) : z_count(pair, x)) << '\n';
    } else if (*verify_cmd) {
      SystemPair pair = verify_pair.make();
      VerifyReport rep = verify(pair, max_x);
      for (const auto& c : rep.checks)
        std::cout << (c.ok ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
      return rep.ok() ? 0 : 1;
    } else if (*info) {
      SystemPair pair = info_pair.make();
      print_info(pair, derived_constants(pair));
    } else if (*ext) {
      SystemPair pair = ext_pair.make();
      print_extremes(extremes(pair), json);
    } else if (*scan_cmd) {
      SystemPair pair = scan_pair.make();
      write_scan_csv(std::cout, pair, derived_constants(pair), parse_bigint(from_arg), parse_bigint(to_arg),
                     parse_bigint(step_arg));
    } else if (*stats_cmd) {
      if (stats_in == "-") {
        write_stats_csv(std::cout, stats_from_stdin(bins));
      } else {
        std::ifstream in(stats_in, std::ios::binary);
        if (!in) throw error(errc::usage_error, "cannot open " + stats_in);
        write_stats_csv(std::cout, stats(in, bins));
      }
    }
  } catch (const error& e) {
    std::cerr << e.what() << '\n';
    return e.code() == errc::internal_inconsistency ? 1 : 2;
  }
  return 0;
}
