#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "deck/graph_core.hpp"
#include "deck/params.hpp"

// Interchange formats for tree covers, parameter-table rendering and the
// decompose benchmark harness.
//
// Edge-list text is the primary format (greppable, diffable):
//   header line "n tau", then one line "t u v" per edge, t in 1..tau,
//   edges in emission order within each tree.
// JSON carries the same content as
//   {"format_version":1,"n":..,"tau":..,"trees":[[[u,v],...],...]}.
// DOT output is one `graph` block per tree, for external renderers.

namespace deck::io {

// Malformed cover input; the message carries line/byte diagnostics.
struct CoverParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string to_edgelist(const TreeCover& cover);
std::string to_json(const TreeCover& cover);
std::string to_dot(const TreeCover& cover);

TreeCover cover_from_edgelist(const std::string& text);
TreeCover cover_from_json(const std::string& text);

// Sniffs the format (JSON iff the first significant byte is '{').
TreeCover parse_cover(const std::string& text);

// Fixed-width table of rows (n, m, sigma, alpha, tau).
std::string render_param_table(const std::vector<ParamRow>& rows);

// The even-order table followed by the odd-order table.
std::string render_param_table_split(int n_max);

struct BenchRecord {
  int n = 0;
  long long m = 0;
  long long emitted_edges = 0;  // exact emission counter, must equal m
  long long best_ns = 0;        // minimum wall time over the trials
  int trials = 0;
};

// Runs decompose(n) `trials` times per order and keeps the fastest run.
// Throws on trials < 3 or any n < 3.
std::vector<BenchRecord> run_decompose_bench(const std::vector<int>& orders,
                                             int trials);

// Least-squares slope of log(best_ns) against log(m).
// NaN when fewer than two records or no spread in m.
double loglog_slope(const std::vector<BenchRecord>& records);

std::string render_bench(const std::vector<BenchRecord>& records);

}  // namespace deck::io
