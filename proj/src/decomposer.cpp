#include "deck/decomposer.hpp"

#include <stdexcept>

namespace deck {

TreeCover deck_e(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("deck_e: n must be even and >= 4");
  const int tau = n / 2;
  const int p = tau;
  const int q = tau + 1;
  TreeCover cover{n, std::vector<std::vector<Edge>>(tau)};

  // T[1]: double star on the adjacent centers p, q.
  auto& t1 = cover.trees[0];
  t1.push_back(canonical_edge(p, q));
  for (int i = 1; i <= p - 1; ++i) {
    t1.push_back(canonical_edge(i, q));
    t1.push_back(canonical_edge(n - i + 1, p));
  }

  // T[2]: Hamiltonian cycle 1,2,...,n,1 minus the edge leaving p.
  auto& t2 = cover.trees[1];
  for (int i = 1; i <= n; ++i) {
    if (i == p) continue;
    t2.push_back(canonical_edge(i, successor(i, n)));
  }

  // T[3..tau]: centers sweep outward from (p,q); each tree is a double
  // star on (pt,qt) completed by a short matching toward the middle.
  int off = 1;
  int pt = p - 1;
  int qt = q + 1;
  for (int t = 3; t <= tau; ++t) {
    auto& tt = cover.trees[t - 1];
    tt.push_back(canonical_edge(pt, qt));
    for (int j = 1; j <= pt - 1; ++j) {
      tt.push_back(canonical_edge(j, qt));
      tt.push_back(canonical_edge(n - j + 1, pt));
    }
    for (int j = off; j >= 1; --j) {
      tt.push_back(canonical_edge(j, pt + j));
      tt.push_back(canonical_edge(n - j + 1, qt - j));
    }
    ++off;
    --pt;
    ++qt;
  }
  return cover;
}

TreeCover deck_o(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("deck_o: n must be odd and >= 3");
  const int tau = (n + 1) / 2;
  const int mid = tau;
  const int p = mid - 1;
  const int q = mid + 1;
  TreeCover cover{n, std::vector<std::vector<Edge>>(tau)};

  // T[1]: the star at mid, the single tree of size n-1.
  auto& t1 = cover.trees[0];
  for (int i = 1; i <= n; ++i) {
    if (i == mid) continue;
    t1.push_back(canonical_edge(i, mid));
  }

  // T[2]: Hamiltonian cycle minus the edges leaving p and leaving mid,
  // a Hamiltonian path on V \ {mid} with n-2 edges.
  auto& t2 = cover.trees[1];
  for (int i = 1; i <= n; ++i) {
    if (i == p || i == mid) continue;
    t2.push_back(canonical_edge(i, successor(i, n)));
  }

  // T[3..tau]: the same outward sweep as the even case, but starting at
  // (p,q) itself; the first sweep tree has no matching part.
  int off = 0;
  int pt = p;
  int qt = q;
  for (int t = 3; t <= tau; ++t) {
    auto& tt = cover.trees[t - 1];
    tt.push_back(canonical_edge(pt, qt));
    for (int j = 1; j <= pt - 1; ++j) {
      tt.push_back(canonical_edge(j, qt));
      tt.push_back(canonical_edge(n - j + 1, pt));
    }
    for (int j = off; j >= 1; --j) {
      tt.push_back(canonical_edge(j, pt + j));
      tt.push_back(canonical_edge(n - j + 1, qt - j));
    }
    ++off;
    --pt;
    ++qt;
  }
  return cover;
}

std::pair<TreeCover, DecompositionTrace> decompose(int n) {
  if (n < 3)
    throw std::invalid_argument(
        "decompose: n must be >= 3 (K_1 has no edges and K_2 is itself a "
        "tree; both orders are trivial)");
  TreeCover cover = n % 2 == 0 ? deck_e(n) : deck_o(n);
  DecompositionTrace trace;
  trace.n = n;
  trace.tau = static_cast<int>(cover.trees.size());
  trace.per_tree_sizes.reserve(cover.trees.size());
  // Trees start empty and every emission is one append, so the size sum
  // is the exact emission count.
  for (const auto& tree : cover.trees) {
    trace.per_tree_sizes.push_back(static_cast<long long>(tree.size()));
    trace.emitted_edges += static_cast<long long>(tree.size());
  }
  return {std::move(cover), trace};
}

namespace {

// Closed-form rebuild of tree t in 1..tau, independent of the running
// sweep state the serial functions carry across trees.
std::vector<Edge> build_tree(int n, int t) {
  const bool even = n % 2 == 0;
  const int mid = (n + 1) / 2;
  const int p = even ? mid : mid - 1;
  const int q = mid + 1;
  std::vector<Edge> tree;

  if (t == 1) {
    tree.reserve(n - 1);
    if (even) {
      tree.push_back(canonical_edge(p, q));
      for (int i = 1; i <= p - 1; ++i) {
        tree.push_back(canonical_edge(i, q));
        tree.push_back(canonical_edge(n - i + 1, p));
      }
    } else {
      for (int i = 1; i <= n; ++i)
        if (i != mid) tree.push_back(canonical_edge(i, mid));
    }
    return tree;
  }

  if (t == 2) {
    for (int i = 1; i <= n; ++i) {
      if (i == p || (!even && i == mid)) continue;
      tree.push_back(canonical_edge(i, successor(i, n)));
    }
    return tree;
  }

  const int off = even ? t - 2 : t - 3;
  const int pt = p - off;
  const int qt = q + off;
  tree.reserve(n - 1);
  tree.push_back(canonical_edge(pt, qt));
  for (int j = 1; j <= pt - 1; ++j) {
    tree.push_back(canonical_edge(j, qt));
    tree.push_back(canonical_edge(n - j + 1, pt));
  }
  for (int j = off; j >= 1; --j) {
    tree.push_back(canonical_edge(j, pt + j));
    tree.push_back(canonical_edge(n - j + 1, qt - j));
  }
  return tree;
}

}  // namespace

TreeCover decompose_parallel(int n) {
  if (n < 3)
    throw std::invalid_argument("decompose_parallel: n must be >= 3");
  const int tau = (n + 1) / 2;
  TreeCover cover{n, std::vector<std::vector<Edge>>(tau)};
#pragma omp parallel for schedule(dynamic)
  for (int t = 1; t <= tau; ++t) cover.trees[t - 1] = build_tree(n, t);
  return cover;
}

}  // namespace deck
