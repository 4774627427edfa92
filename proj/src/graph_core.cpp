#include "deck/graph_core.hpp"

#include <stdexcept>
#include <string>

namespace deck {

Edge canonical_edge(VertexId a, VertexId b) {
  if (a == b)
    throw std::invalid_argument("canonical_edge: self-loop at vertex " +
                                std::to_string(a));
  if (a < 1 || b < 1)
    throw std::invalid_argument("canonical_edge: vertex ids must be >= 1");
  return a < b ? Edge{a, b} : Edge{b, a};
}

long long complete_edge_count(int n) {
  if (n < 1) throw std::invalid_argument("complete_edge_count: n must be >= 1");
  return static_cast<long long>(n) * (n - 1) / 2;
}

std::vector<Edge> enumerate_edges(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_edges: n must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(complete_edge_count(n)));
  for (int u = 1; u < n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
  return edges;
}

VertexId successor(VertexId i, int n) {
  if (i < 1 || i > n)
    throw std::invalid_argument("successor: vertex " + std::to_string(i) +
                                " outside 1.." + std::to_string(n));
  return i % n + 1;
}

}  // namespace deck
