#include "deck/io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "deck/decomposer.hpp"

namespace deck::io {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(size_t line_no, const std::string& what) {
  throw CoverParseError("line " + std::to_string(line_no) + ": " + what);
}

// Unordered pair normalization only; self-loops and out-of-range
// endpoints are kept for the verifier to report.
Edge normalize(int u, int v) { return u > v ? Edge{v, u} : Edge{u, v}; }

}  // namespace

std::string to_edgelist(const TreeCover& cover) {
  std::string out = std::to_string(cover.n) + " " +
                    std::to_string(cover.trees.size()) + "\n";
  for (size_t t = 0; t < cover.trees.size(); ++t) {
    const std::string prefix = std::to_string(t + 1) + " ";
    for (const Edge& e : cover.trees[t])
      out += prefix + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

TreeCover cover_from_edgelist(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  TreeCover cover;
  bool have_header = false;
  long long tau = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    if (!have_header) {
      long long n = 0;
      if (!(fields >> n >> tau))
        parse_fail(line_no, "expected header \"n tau\"");
      std::string extra;
      if (fields >> extra)
        parse_fail(line_no, "unexpected trailing content \"" + extra + "\"");
      if (n < 1 || n > std::numeric_limits<int>::max())
        parse_fail(line_no, "order n out of range: " + std::to_string(n));
      if (tau < 0 || tau > complete_edge_count(static_cast<int>(n)))
        parse_fail(line_no, "tree count out of range: " + std::to_string(tau));
      cover.n = static_cast<int>(n);
      cover.trees.resize(static_cast<size_t>(tau));
      have_header = true;
      continue;
    }
    long long t = 0, u = 0, v = 0;
    if (!(fields >> t >> u >> v))
      parse_fail(line_no, "expected \"t u v\"");
    std::string extra;
    if (fields >> extra)
      parse_fail(line_no, "unexpected trailing content \"" + extra + "\"");
    if (t < 1 || t > tau)
      parse_fail(line_no, "tree index " + std::to_string(t) +
                              " outside 1.." + std::to_string(tau));
    cover.trees[static_cast<size_t>(t - 1)].push_back(
        normalize(static_cast<int>(u), static_cast<int>(v)));
  }
  if (!have_header) throw CoverParseError("line 1: empty input");
  return cover;
}

std::string to_json(const TreeCover& cover) {
  json trees = json::array();
  for (const auto& tree : cover.trees) {
    json edges = json::array();
    for (const Edge& e : tree) edges.push_back({e.u, e.v});
    trees.push_back(std::move(edges));
  }
  json j;
  j["format_version"] = 1;
  j["n"] = cover.n;
  j["tau"] = cover.trees.size();
  j["trees"] = std::move(trees);
  return j.dump() + "\n";
}

TreeCover cover_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CoverParseError(e.what());
  }
  try {
    if (!j.is_object()) throw CoverParseError("top level is not an object");
    if (j.contains("format_version") &&
        j.at("format_version").get<long long>() != 1)
      throw CoverParseError("unsupported format_version " +
                            j.at("format_version").dump());
    TreeCover cover;
    cover.n = j.at("n").get<int>();
    if (cover.n < 1) throw CoverParseError("order n must be >= 1");
    const auto& trees = j.at("trees");
    if (!trees.is_array()) throw CoverParseError("\"trees\" is not an array");
    if (j.at("tau").get<long long>() !=
        static_cast<long long>(trees.size()))
      throw CoverParseError("tau field " + j.at("tau").dump() +
                            " does not match number of trees (" +
                            std::to_string(trees.size()) + ")");
    cover.trees.reserve(trees.size());
    for (size_t t = 0; t < trees.size(); ++t) {
      const auto& tree = trees[t];
      if (!tree.is_array())
        throw CoverParseError("trees[" + std::to_string(t) +
                              "] is not an array");
      std::vector<Edge> edges;
      edges.reserve(tree.size());
      for (size_t i = 0; i < tree.size(); ++i) {
        const auto& pair = tree[i];
        if (!pair.is_array() || pair.size() != 2 ||
            !pair[0].is_number_integer() || !pair[1].is_number_integer())
          throw CoverParseError("trees[" + std::to_string(t) + "][" +
                                std::to_string(i) +
                                "] is not an integer pair");
        edges.push_back(normalize(pair[0].get<int>(), pair[1].get<int>()));
      }
      cover.trees.push_back(std::move(edges));
    }
    return cover;
  } catch (const json::exception& e) {
    throw CoverParseError(e.what());
  }
}

TreeCover parse_cover(const std::string& text) {
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw CoverParseError("line 1: empty input");
  if (text[first] == '{') return cover_from_json(text);
  return cover_from_edgelist(text);
}

std::string to_dot(const TreeCover& cover) {
  std::string out;
  for (size_t t = 0; t < cover.trees.size(); ++t) {
    out += "graph T" + std::to_string(t + 1) + " {\n";
    for (const Edge& e : cover.trees[t])
      out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
    out += "}\n";
  }
  return out;
}

std::string render_param_table(const std::vector<ParamRow>& rows) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%4s %6s %6s %6s %6s\n", "n", "m", "sigma",
                "alpha", "tau");
  std::string out = buf;
  for (const ParamRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%4d %6lld %6d %6d %6d\n", r.n, r.m,
                  r.sigma, r.alpha, r.tau);
    out += buf;
  }
  return out;
}

std::string render_param_table_split(int n_max) {
  const std::vector<ParamRow> rows = param_table(n_max);
  std::vector<ParamRow> even, odd;
  for (const ParamRow& r : rows) (r.n % 2 == 0 ? even : odd).push_back(r);
  std::string out = "even n\n" + render_param_table(even);
  out += "\nodd n\n" + render_param_table(odd);
  return out;
}

std::vector<BenchRecord> run_decompose_bench(const std::vector<int>& orders,
                                             int trials) {
  if (trials < 3)
    throw std::invalid_argument("bench: trials must be >= 3");
  for (int n : orders)
    if (n < 3) throw std::invalid_argument("bench: every n must be >= 3");

  std::vector<BenchRecord> records;
  records.reserve(orders.size());
  for (int n : orders) {
    BenchRecord rec;
    rec.n = n;
    rec.m = complete_edge_count(n);
    rec.trials = trials;
    rec.best_ns = std::numeric_limits<long long>::max();
    for (int trial = 0; trial < trials; ++trial) {
      const auto start = std::chrono::steady_clock::now();
      const auto [cover, trace] = decompose(n);
      const auto stop = std::chrono::steady_clock::now();
      rec.emitted_edges = trace.emitted_edges;
      rec.best_ns = std::min(
          rec.best_ns,
          static_cast<long long>(
              std::chrono::duration_cast<std::chrono::nanoseconds>(stop -
                                                                   start)
                  .count()));
    }
    if (rec.best_ns < 1) rec.best_ns = 1;  // clock granularity floor
    records.push_back(rec);
  }
  return records;
}

double loglog_slope(const std::vector<BenchRecord>& records) {
  if (records.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0;
  for (const BenchRecord& r : records) {
    sx += std::log(static_cast<double>(r.m));
    sy += std::log(static_cast<double>(r.best_ns));
  }
  const double mx = sx / records.size();
  const double my = sy / records.size();
  double num = 0, den = 0;
  for (const BenchRecord& r : records) {
    const double dx = std::log(static_cast<double>(r.m)) - mx;
    const double dy = std::log(static_cast<double>(r.best_ns)) - my;
    num += dx * dy;
    den += dx * dx;
  }
  if (den == 0) return std::numeric_limits<double>::quiet_NaN();
  return num / den;
}

std::string render_bench(const std::vector<BenchRecord>& records) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%6s %12s %12s %8s %12s\n", "n", "m",
                "emitted", "trials", "best_ns");
  std::string out = buf;
  for (const BenchRecord& r : records) {
    std::snprintf(buf, sizeof(buf), "%6d %12lld %12lld %8d %12lld\n", r.n, r.m,
                  r.emitted_edges, r.trials, r.best_ns);
    out += buf;
  }
  return out;
}

}  // namespace deck::io
