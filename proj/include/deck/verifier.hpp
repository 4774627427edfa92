#pragma once

#include <span>
#include <string>
#include <vector>

#include "deck/graph_core.hpp"

// Independent validation of a claimed tree cover of K_n. verify_cover
// accepts arbitrary (possibly malformed) input and reports every
// violation instead of throwing; producers and the CLI rely on it as the
// single source of truth for cover validity.
//
// Three engines produce identical reports:
//   verify_cover           union-find scans + dense edge index, serial
//   verify_cover_parallel  the same scans as an OpenMP kernel over trees
//   verify_cover_reference definitional route (prefix reachability for
//                          cycles, breadth-first search for connectivity,
//                          ordered-map edge occurrences); quadratic, kept
//                          as the slow reference the fast engines are
//                          tested against

namespace deck {

struct VerificationReport {
  bool pairwise_disjoint = false;  // no edge appears in two distinct trees
  bool covers_all_edges = false;   // union is exactly E(K_n), no bad edges
  bool all_acyclic = false;        // per tree, as multigraphs
  bool all_connected = false;      // per tree, on its induced vertex set
  bool sizes_match = false;        // sorted sizes equal the minimum multiset
  bool count_equals_tau = false;   // tree count is ceil(n/2)
  std::vector<bool> spanning_flags;  // tree touches all n vertices
  std::vector<std::string> failures;

  bool pass() const {
    return pairwise_disjoint && covers_all_edges && all_acyclic &&
           all_connected && sizes_match && count_equals_tau;
  }
};

// True iff the multigraph on the endpoints appearing in `edges` is
// connected and acyclic. Duplicate edges count as a cycle; the empty
// set is not a tree.
bool is_tree(std::span<const Edge> edges);

// Runs all cover checks; never throws on malformed input with cover.n >= 3
// (bad endpoints, self-loops and duplicates become failure entries).
// Throws std::invalid_argument only when cover.n < 3.
VerificationReport verify_cover(const TreeCover& cover);
VerificationReport verify_cover_parallel(const TreeCover& cover);
VerificationReport verify_cover_reference(const TreeCover& cover);

// Least k such that E(K_n) partitions into k edge-disjoint trees, found
// by exhaustive backtracking over edge-to-tree assignments with
// incremental cycle pruning and first-empty-tree symmetry breaking.
// Only for n in 3..6.
int brute_force_min_trees(int n);

}  // namespace deck
