#pragma once

#include <vector>

#include "deck/graph_core.hpp"

// Decomposition parameters of complete graphs: spanning tree packing
// number sigma, arboricity alpha, tree covering number tau, the
// feasibility test for a tree size sequence, and exhaustive checkers for
// the Tutte/Nash-Williams conditions on small graphs.
//
// The checkers are deliberately exhaustive (they are desk-scale oracles,
// not general solvers) and refuse instances above a hard cap. Each has a
// serial reference and an OpenMP variant over the same enumeration.

namespace deck {

// One row of the parameter table: order, size, sigma, alpha, tau.
struct ParamRow {
  int n = 0;
  long long m = 0;
  int sigma = 0;
  int alpha = 0;
  int tau = 0;

  bool operator==(const ParamRow&) const = default;
};

// Arbitrary simple undirected graph, only small instances. Used by the
// exhaustive condition checkers.
struct SmallGraph {
  int n = 0;
  std::vector<Edge> edges;  // canonical, duplicate-free

  // Validates endpoints, canonical form and uniqueness; throws
  // std::invalid_argument otherwise.
  SmallGraph(int order, std::vector<Edge> edge_list);

  static SmallGraph complete(int order);
};

// sigma(K_n) = floor(n/2). Throws on n < 1.
int stp_number_complete(int n);

// sigma(K_{n1,n2}) = floor(n1*n2 / (n1+n2-1)) for 1 <= n1 <= n2.
int stp_number_bipartite(int n1, int n2);

// alpha = ceil(m / (n-1)). Throws on n < 2 or m < 0.
int arboricity(int n, long long m);

// tau(K_n) = ceil(n/2). Throws on n < 3 (trivial orders rejected).
int tree_cover_number(int n);

// The size multiset of a minimum tree cover of K_n, in the order the
// decomposer emits trees: even n -> n/2 copies of n-1; odd n -> one n-1
// followed by (n-1)/2 copies of n-2. Throws on n < 3.
SizeSequence cover_size_sequence(int n);

// True iff x pairwise edge-disjoint trees of these sizes exist in K_n:
// every size <= n-1 and the sizes sum to n(n-1)/2.
// Throws on n < 3, an empty sequence, or a nonpositive size.
bool feasible_size_sequence(int n, const SizeSequence& sizes);

// Nash-Williams sparseness: true iff |E(X)| <= kappa*(|X|-1) for every
// nonempty X subseteq V(g), i.e. E(g) decomposes into kappa forests.
// Exhaustive over 2^n - 1 subsets; rejects g.n > 20 as too large.
bool nash_williams_sparse(const SmallGraph& g, int kappa);
bool nash_williams_sparse_parallel(const SmallGraph& g, int kappa);

// Tutte/Nash-Williams packing: true iff |E_P(g)| >= kappa*(|P|-1) for
// every partition P of V(g), where E_P is the set of edges crossing
// between distinct blocks, i.e. g contains kappa edge-disjoint spanning
// trees. Exhaustive over all set partitions; rejects g.n > 10.
bool tutte_packing_condition(const SmallGraph& g, int kappa);
bool tutte_packing_condition_parallel(const SmallGraph& g, int kappa);

// Rows for n = 3..n_max.
std::vector<ParamRow> param_table(int n_max);

}  // namespace deck
