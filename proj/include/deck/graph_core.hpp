#pragma once

#include <compare>
#include <cstdint>
#include <vector>

// Core vertex/edge representations for complete graphs K_n.
// Vertices are 1-indexed throughout; edges are stored canonically (u < v)
// so that edge-set disjointness is plain equality on pairs.

namespace deck {

using VertexId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  auto operator<=>(const Edge&) const = default;
};

// Multiset of tree sizes (edge counts) of a claimed cover.
using SizeSequence = std::vector<long long>;

// An ordered list of edge lists T[1..x] claimed to decompose E(K_n).
// Order matters: producers emit edges deterministically so serialized
// output is byte-stable. Set semantics (no duplicate edges) is an
// invariant of decomposer output, checked by the verifier for foreign
// covers rather than enforced by the container.
struct TreeCover {
  int n = 0;
  std::vector<std::vector<Edge>> trees;

  bool operator==(const TreeCover&) const = default;
};

// Normalizes an unordered vertex pair to u < v.
// Throws std::invalid_argument on a self-loop or a vertex < 1.
Edge canonical_edge(VertexId a, VertexId b);

// n(n-1)/2. Throws on n < 1.
long long complete_edge_count(int n);

// All canonical edges {(u,v) : 1 <= u < v <= n} in lexicographic order.
// Throws on n < 1.
std::vector<Edge> enumerate_edges(int n);

// Cyclic successor on 1..n: i+1 for i < n, else 1.
// Throws when i is outside 1..n.
VertexId successor(VertexId i, int n);

// Maps a canonical edge of K_n to a dense index in 0..m-1,
// lexicographic order. No range checking.
inline long long edge_index(VertexId u, VertexId v, int n) {
  long long uu = u;
  return (uu - 1) * n - uu * (uu - 1) / 2 + (v - u - 1);
}

}  // namespace deck
