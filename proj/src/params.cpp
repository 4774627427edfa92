#include "deck/params.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace deck {

namespace {

constexpr int kNashWilliamsMaxOrder = 20;  // 2^n - 1 subset checks
constexpr int kTutteMaxOrder = 10;         // Bell(n) partition checks

void require_positive_kappa(int kappa) {
  if (kappa < 1) throw std::invalid_argument("kappa must be a positive integer");
}

}  // namespace

SmallGraph::SmallGraph(int order, std::vector<Edge> edge_list)
    : n(order), edges(std::move(edge_list)) {
  if (n < 1) throw std::invalid_argument("SmallGraph: order must be >= 1");
  for (const Edge& e : edges) {
    if (e.u < 1 || e.v > n || e.u >= e.v)
      throw std::invalid_argument("SmallGraph: edge (" + std::to_string(e.u) +
                                  "," + std::to_string(e.v) +
                                  ") is not canonical within 1.." +
                                  std::to_string(n));
  }
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("SmallGraph: duplicate edge");
}

SmallGraph SmallGraph::complete(int order) {
  return SmallGraph(order, enumerate_edges(order));
}

int stp_number_complete(int n) {
  if (n < 1) throw std::invalid_argument("stp_number_complete: n must be >= 1");
  return n / 2;
}

int stp_number_bipartite(int n1, int n2) {
  if (n1 < 1 || n2 < 1 || n1 > n2)
    throw std::invalid_argument("stp_number_bipartite: need 1 <= n1 <= n2");
  return static_cast<int>(static_cast<long long>(n1) * n2 / (n1 + n2 - 1));
}

int arboricity(int n, long long m) {
  if (n < 2) throw std::invalid_argument("arboricity: n must be >= 2");
  if (m < 0) throw std::invalid_argument("arboricity: m must be >= 0");
  // ceil(m/(n-1)); 0 for the empty graph.
  return static_cast<int>((m + n - 2) / (n - 1));
}

int tree_cover_number(int n) {
  if (n < 3)
    throw std::invalid_argument("tree_cover_number: n must be >= 3");
  return (n + 1) / 2;
}

SizeSequence cover_size_sequence(int n) {
  if (n < 3)
    throw std::invalid_argument("cover_size_sequence: n must be >= 3");
  SizeSequence sizes;
  if (n % 2 == 0) {
    sizes.assign(n / 2, n - 1);
  } else {
    sizes.push_back(n - 1);
    sizes.insert(sizes.end(), (n - 1) / 2, n - 2);
  }
  return sizes;
}

bool feasible_size_sequence(int n, const SizeSequence& sizes) {
  if (n < 3)
    throw std::invalid_argument("feasible_size_sequence: n must be >= 3");
  if (sizes.empty())
    throw std::invalid_argument("feasible_size_sequence: empty sequence");
  for (long long s : sizes)
    if (s < 1)
      throw std::invalid_argument("feasible_size_sequence: sizes must be >= 1");
  long long sum = 0;
  for (long long s : sizes) {
    if (s > n - 1) return false;
    sum += s;
  }
  return sum == complete_edge_count(n);
}

namespace {

std::vector<std::uint32_t> adjacency_masks(const SmallGraph& g) {
  std::vector<std::uint32_t> adj(g.n + 1, 0);
  for (const Edge& e : g.edges) {
    adj[e.u] |= 1u << (e.v - 1);
    adj[e.v] |= 1u << (e.u - 1);
  }
  return adj;
}

// |E(X)| for the vertex subset encoded in mask.
long long induced_edge_count(const std::vector<std::uint32_t>& adj,
                             std::uint32_t mask) {
  long long twice = 0;
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    int v = std::countr_zero(rest) + 1;
    twice += std::popcount(adj[v] & mask);
  }
  return twice / 2;
}

void check_nash_instance(const SmallGraph& g, int kappa) {
  require_positive_kappa(kappa);
  if (g.n > kNashWilliamsMaxOrder)
    throw std::invalid_argument(
        "nash_williams_sparse: instance too large for the exhaustive subset "
        "check (n > " +
        std::to_string(kNashWilliamsMaxOrder) + ")");
}

}  // namespace

bool nash_williams_sparse(const SmallGraph& g, int kappa) {
  check_nash_instance(g, kappa);
  const std::uint32_t full = (1u << g.n) - 1;
  const auto adj = adjacency_masks(g);
  for (std::uint32_t x = 1; x <= full; ++x) {
    const int size = std::popcount(x);
    if (induced_edge_count(adj, x) >
        static_cast<long long>(kappa) * (size - 1))
      return false;
  }
  return true;
}

bool nash_williams_sparse_parallel(const SmallGraph& g, int kappa) {
  check_nash_instance(g, kappa);
  const long long full = (1LL << g.n) - 1;
  const auto adj = adjacency_masks(g);
  int ok = 1;
#pragma omp parallel for schedule(static) reduction(&& : ok)
  for (long long x = 1; x <= full; ++x) {
    const auto mask = static_cast<std::uint32_t>(x);
    const int size = std::popcount(mask);
    if (induced_edge_count(adj, mask) >
        static_cast<long long>(kappa) * (size - 1))
      ok = 0;
  }
  return ok != 0;
}

namespace {

void check_tutte_instance(const SmallGraph& g, int kappa) {
  require_positive_kappa(kappa);
  if (g.n > kTutteMaxOrder)
    throw std::invalid_argument(
        "tutte_packing_condition: instance too large for the exhaustive "
        "partition check (n > " +
        std::to_string(kTutteMaxOrder) + ")");
}

// blocks[v-1] is the partition block of vertex v.
bool partition_satisfies(const SmallGraph& g, int kappa,
                         const std::vector<int>& blocks, int block_count) {
  long long crossing = 0;
  for (const Edge& e : g.edges)
    crossing += blocks[e.u - 1] != blocks[e.v - 1];
  return crossing >= static_cast<long long>(kappa) * (block_count - 1);
}

// Enumerates set partitions as restricted growth strings from position i
// onward; returns false as soon as one partition violates the bound.
bool tutte_from(const SmallGraph& g, int kappa, std::vector<int>& blocks,
                int i, int max_block) {
  if (i == g.n)
    return partition_satisfies(g, kappa, blocks, max_block + 1);
  for (int b = 0; b <= max_block + 1; ++b) {
    blocks[i] = b;
    if (!tutte_from(g, kappa, blocks, i + 1, std::max(max_block, b)))
      return false;
  }
  return true;
}

struct PartitionPrefix {
  std::vector<int> blocks;
  int max_block = 0;
};

void collect_prefixes(int n, int depth, std::vector<int>& blocks, int i,
                      int max_block, std::vector<PartitionPrefix>& out) {
  if (i == depth) {
    out.push_back({blocks, max_block});
    return;
  }
  for (int b = 0; b <= max_block + 1; ++b) {
    blocks[i] = b;
    collect_prefixes(n, depth, blocks, i + 1, std::max(max_block, b), out);
  }
}

}  // namespace

bool tutte_packing_condition(const SmallGraph& g, int kappa) {
  check_tutte_instance(g, kappa);
  std::vector<int> blocks(g.n, 0);
  return tutte_from(g, kappa, blocks, 1, 0);
}

bool tutte_packing_condition_parallel(const SmallGraph& g, int kappa) {
  check_tutte_instance(g, kappa);
  // Fan out over restricted-growth prefixes, finish each serially.
  const int depth = std::min(g.n, 6);
  std::vector<PartitionPrefix> prefixes;
  std::vector<int> blocks(g.n, 0);
  collect_prefixes(g.n, depth, blocks, 1, 0, prefixes);

  int ok = 1;
  const auto count = static_cast<long long>(prefixes.size());
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
  for (long long idx = 0; idx < count; ++idx) {
    std::vector<int> local = prefixes[idx].blocks;
    if (!tutte_from(g, kappa, local, depth, prefixes[idx].max_block)) ok = 0;
  }
  return ok != 0;
}

std::vector<ParamRow> param_table(int n_max) {
  if (n_max < 3) throw std::invalid_argument("param_table: n_max must be >= 3");
  std::vector<ParamRow> rows;
  rows.reserve(n_max - 2);
  for (int n = 3; n <= n_max; ++n) {
    const long long m = complete_edge_count(n);
    rows.push_back(
        {n, m, stp_number_complete(n), arboricity(n, m), tree_cover_number(n)});
  }
  return rows;
}

}  // namespace deck
