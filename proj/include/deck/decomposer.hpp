#pragma once

#include <utility>

#include "deck/graph_core.hpp"

// Decomposition of E(K_n) into the minimum number ceil(n/2) of pairwise
// edge-disjoint trees. deck_e handles even n, deck_o odd n; both emit
// every edge exactly once, so the whole construction is O(m).
//
// The serial functions are the reference: they sweep the trees in order
// with running state, exactly as the construction is defined, and count
// emissions. decompose_parallel rebuilds each tree independently from
// closed-form per-tree offsets (an OpenMP kernel); its output must be
// identical to the serial output, which the tests check.

namespace deck {

struct DecompositionTrace {
  int n = 0;
  int tau = 0;
  long long emitted_edges = 0;  // exact number of edge emissions
  SizeSequence per_tree_sizes;
};

// Even n >= 4. T[1] is a double star on centers n/2 and n/2+1, T[2] the
// Hamiltonian cycle minus the edge leaving n/2, T[3..tau] a sweep of
// double-star-plus-matching trees. Every tree spans all n vertices.
TreeCover deck_e(int n);

// Odd n >= 3. T[1] is the star at mid = ceil(n/2) (n-1 edges), the
// remaining (n-1)/2 trees have n-2 edges each and avoid no particular
// contract beyond being trees.
TreeCover deck_o(int n);

// Dispatches by parity. Rejects n < 3 (K_1 and K_2 are trivial).
std::pair<TreeCover, DecompositionTrace> decompose(int n);

// Same cover as decompose(n).first, each tree built independently.
TreeCover decompose_parallel(int n);

}  // namespace deck
