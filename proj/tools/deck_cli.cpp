// deck: decompose complete graphs into the minimum number of
// edge-disjoint trees, verify claimed covers, print the decomposition
// parameter table, and benchmark the decomposer.
//
// Exit codes: 0 success / verified, 1 semantic failure (invalid cover,
// failed bench assertion), 2 usage or parse error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deck/decomposer.hpp"
#include "deck/io.hpp"
#include "deck/params.hpp"
#include "deck/verifier.hpp"

namespace {

int write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return 1;
  }
  out << content;
  return out.good() ? 0 : 1;
}

int run_decompose(int n, const std::string& format, const std::string& out) {
  if (n < 3) {
    std::cerr << "error: n = " << n << " is below the minimum order 3.\n"
              << "note: the small orders are trivial: K_1 has no edges "
                 "(empty cover), K_2 is a single edge and is itself a tree "
                 "(cover of one tree).\n";
    return 2;
  }
  const deck::TreeCover cover = deck::decompose(n).first;
  std::string payload;
  if (format == "edgelist")
    payload = deck::io::to_edgelist(cover);
  else if (format == "json")
    payload = deck::io::to_json(cover);
  else
    payload = deck::io::to_dot(cover);
  return write_output(out, payload);
}

int run_verify(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin),
                std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot open " << path << "\n";
      return 2;
    }
    text.assign(std::istreambuf_iterator<char>(in),
                std::istreambuf_iterator<char>());
  }

  deck::TreeCover cover;
  try {
    cover = deck::io::parse_cover(text);
  } catch (const deck::io::CoverParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  if (cover.n < 3) {
    std::cerr << "error: cover order " << cover.n
              << " is below the minimum order 3\n";
    return 2;
  }

  const deck::VerificationReport report = deck::verify_cover_parallel(cover);
  if (report.pass()) {
    int spanning = 0;
    for (bool f : report.spanning_flags) spanning += f;
    std::cout << "OK: valid cover of K_" << cover.n << " into "
              << cover.trees.size() << " edge-disjoint trees (" << spanning
              << " spanning)\n";
    return 0;
  }
  for (const std::string& f : report.failures) std::cout << f << "\n";
  std::cout << "FAIL: " << report.failures.size() << " finding(s)\n";
  return 1;
}

int run_params(int n_max, bool split_parity) {
  if (split_parity)
    std::cout << deck::io::render_param_table_split(n_max);
  else
    std::cout << deck::io::render_param_table(deck::param_table(n_max));
  return 0;
}

int run_bench(const std::vector<int>& orders, int trials) {
  if (trials < 3) {
    std::cerr << "error: --trials must be >= 3\n";
    return 2;
  }
  for (int n : orders) {
    if (n < 3) {
      std::cerr << "error: every n must be >= 3\n";
      return 2;
    }
  }
  const auto records = deck::io::run_decompose_bench(orders, trials);
  std::cout << deck::io::render_bench(records);
  bool counts_ok = true;
  for (const auto& r : records) {
    if (r.emitted_edges != r.m) {
      std::cout << "FAIL: n=" << r.n << " emitted " << r.emitted_edges
                << " edges, expected " << r.m << "\n";
      counts_ok = false;
    }
  }
  const double slope = deck::io::loglog_slope(records);
  if (std::isnan(slope)) {
    std::cout << "log-log slope: n/a (need >= 2 distinct orders)\n";
  } else {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "log-log slope: %.3f (advisory)\n", slope);
    std::cout << buf;
  }
  return counts_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "decompose the edge set of a complete graph K_n into the minimum "
      "number ceil(n/2) of edge-disjoint trees"};
  app.require_subcommand(1);

  int n = 0;
  std::string format = "edgelist";
  std::string output = "-";
  auto* cmd_decompose =
      app.add_subcommand("decompose", "emit a tree cover of K_n");
  cmd_decompose->add_option("-n,--order", n, "graph order")->required();
  cmd_decompose->add_option("--format", format, "edgelist|json|dot")
      ->check(CLI::IsMember({"edgelist", "json", "dot"}));
  cmd_decompose->add_option("-o,--output", output,
                            "output path, - for stdout");

  std::string input = "-";
  auto* cmd_verify =
      app.add_subcommand("verify", "check a claimed cover (file or -)");
  cmd_verify->add_option("input", input, "cover file (edge list or JSON)");

  int n_max = 0;
  bool split_parity = false;
  auto* cmd_params = app.add_subcommand(
      "params", "print n, m, sigma, alpha, tau for n = 3..n-max");
  cmd_params->add_option("--n-max", n_max, "largest order")
      ->required()
      ->check(CLI::Range(3, 1000000));
  cmd_params->add_flag("--split-parity", split_parity,
                       "print the even table, then the odd table");

  std::vector<int> orders;
  int trials = 5;
  auto* cmd_bench = app.add_subcommand(
      "bench", "time decompose and check the exact edge-emission count");
  cmd_bench->add_option("--n-list", orders, "orders to benchmark")
      ->required()
      ->delimiter(',');
  cmd_bench->add_option("--trials", trials, "repetitions per order (>= 3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit cleanly
  }

  try {
    if (cmd_decompose->parsed()) return run_decompose(n, format, output);
    if (cmd_verify->parsed()) return run_verify(input);
    if (cmd_params->parsed()) return run_params(n_max, split_parity);
    if (cmd_bench->parsed()) return run_bench(orders, trials);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
