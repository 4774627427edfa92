#include "deck/verifier.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

#include "deck/params.hpp"

namespace deck {

namespace {

std::string edge_str(Edge e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

std::string tree_label(int t) { return "tree " + std::to_string(t + 1); }

std::string fail_range(int t, Edge e, int n) {
  return tree_label(t) + ": edge " + edge_str(e) + " has endpoints outside 1.." +
         std::to_string(n);
}
std::string fail_self_loop(int t, Edge e) {
  return tree_label(t) + ": self-loop " + edge_str(e);
}
std::string fail_duplicate(int t, Edge e) {
  return tree_label(t) + ": duplicate edge " + edge_str(e);
}
std::string fail_cycle(int t, Edge e) {
  return tree_label(t) + ": edge " + edge_str(e) + " closes a cycle";
}
std::string fail_empty(int t) { return tree_label(t) + ": empty"; }
std::string fail_disconnected(int t, int comps, int verts) {
  return tree_label(t) + ": disconnected (" + std::to_string(comps) +
         " components on " + std::to_string(verts) + " vertices)";
}
std::string fail_shared(Edge e, int t1, int t2) {
  return "edge " + edge_str(e) + " appears in " + tree_label(t1) + " and " +
         tree_label(t2);
}
std::string fail_missing(Edge e) {
  return "edge " + edge_str(e) + " is not covered by any tree";
}
std::string fail_count(size_t got, int want) {
  return "tree count " + std::to_string(got) + " != tau = " +
         std::to_string(want);
}

// Outcome of scanning one tree's raw edge list. unique_edges is the
// sorted, deduplicated list of its valid canonical edges.
struct TreeScan {
  bool acyclic = true;
  bool connected = false;
  bool spanning = false;
  bool has_bad_edge = false;
  std::vector<Edge> unique_edges;
  std::vector<std::string> failures;
};

// Splits a raw edge list into valid canonicalized edges, emitting
// range/self-loop failures in list order.
std::vector<Edge> valid_edges_of(int n, int t,
                                 const std::vector<Edge>& raw,
                                 TreeScan& scan) {
  std::vector<Edge> valid;
  valid.reserve(raw.size());
  for (Edge e : raw) {
    if (e.u < 1 || e.v < 1 || e.u > n || e.v > n) {
      scan.failures.push_back(fail_range(t, e, n));
      scan.has_bad_edge = true;
      continue;
    }
    if (e.u == e.v) {
      scan.failures.push_back(fail_self_loop(t, e));
      scan.has_bad_edge = true;
      scan.acyclic = false;
      continue;
    }
    valid.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  return valid;
}

void record_duplicates(int t, const std::vector<Edge>& sorted_valid,
                       TreeScan& scan) {
  for (size_t i = 0; i + 1 < sorted_valid.size(); ++i) {
    if (sorted_valid[i] == sorted_valid[i + 1] &&
        (i == 0 || sorted_valid[i - 1] != sorted_valid[i]))
      scan.failures.push_back(fail_duplicate(t, sorted_valid[i]));
  }
}

// Definitional scan: cycle detection by prefix connectivity (an edge
// closes a cycle iff its endpoints are already joined by the edges
// before it), connectivity by breadth-first search.
TreeScan scan_tree_definitional(int n, int t, const std::vector<Edge>& raw) {
  TreeScan scan;
  std::vector<Edge> valid = valid_edges_of(n, t, raw, scan);

  std::vector<Edge> sorted_valid = valid;
  std::sort(sorted_valid.begin(), sorted_valid.end());
  record_duplicates(t, sorted_valid, scan);

  std::vector<std::vector<int>> adj(n + 1);
  std::vector<char> touched(n + 1, 0);
  int touched_count = 0;
  for (Edge e : valid) {
    // connected already? walk the prefix graph from e.u
    if (touched[e.u] && touched[e.v]) {
      std::vector<char> seen(n + 1, 0);
      std::queue<int> frontier;
      frontier.push(e.u);
      seen[e.u] = 1;
      bool reached = false;
      while (!frontier.empty() && !reached) {
        int w = frontier.front();
        frontier.pop();
        for (int x : adj[w]) {
          if (seen[x]) continue;
          seen[x] = 1;
          if (x == e.v) reached = true;
          frontier.push(x);
        }
      }
      if (reached) {
        scan.failures.push_back(fail_cycle(t, e));
        scan.acyclic = false;
      }
    }
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
    for (int w : {e.u, e.v}) {
      if (!touched[w]) {
        touched[w] = 1;
        ++touched_count;
      }
    }
  }

  if (raw.empty()) scan.failures.push_back(fail_empty(t));
  if (!valid.empty()) {
    int start = 0;
    for (int v = 1; v <= n && start == 0; ++v)
      if (touched[v]) start = v;
    std::vector<char> seen(n + 1, 0);
    std::queue<int> frontier;
    frontier.push(start);
    seen[start] = 1;
    int reached = 1;
    while (!frontier.empty()) {
      int w = frontier.front();
      frontier.pop();
      for (int x : adj[w]) {
        if (seen[x]) continue;
        seen[x] = 1;
        ++reached;
        frontier.push(x);
      }
    }
    if (reached == touched_count) {
      scan.connected = true;
    } else {
      std::vector<char> seen2(n + 1, 0);
      int comps = 0;
      for (int v = 1; v <= n; ++v) {
        if (!touched[v] || seen2[v]) continue;
        ++comps;
        std::queue<int> q;
        q.push(v);
        seen2[v] = 1;
        while (!q.empty()) {
          int w = q.front();
          q.pop();
          for (int x : adj[w])
            if (!seen2[x]) {
              seen2[x] = 1;
              q.push(x);
            }
        }
      }
      scan.failures.push_back(fail_disconnected(t, comps, touched_count));
    }
  }
  scan.spanning = touched_count == n;

  sorted_valid.erase(std::unique(sorted_valid.begin(), sorted_valid.end()),
                     sorted_valid.end());
  scan.unique_edges = std::move(sorted_valid);
  return scan;
}

// Fast scan: incremental disjoint-set union, path halving.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n + 1) {
    for (int v = 0; v <= n; ++v) parent[v] = v;
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  // false if u and v were already joined
  bool unite(int u, int v) {
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
    return true;
  }
};

TreeScan scan_tree_dsu(int n, int t, const std::vector<Edge>& raw) {
  TreeScan scan;
  std::vector<Edge> valid = valid_edges_of(n, t, raw, scan);

  std::vector<Edge> sorted_valid = valid;
  std::sort(sorted_valid.begin(), sorted_valid.end());
  record_duplicates(t, sorted_valid, scan);

  Dsu dsu(n);
  std::vector<char> touched(n + 1, 0);
  int touched_count = 0;
  int merges = 0;
  for (Edge e : valid) {
    for (int w : {e.u, e.v}) {
      if (!touched[w]) {
        touched[w] = 1;
        ++touched_count;
      }
    }
    if (dsu.unite(e.u, e.v)) {
      ++merges;
    } else {
      scan.failures.push_back(fail_cycle(t, e));
      scan.acyclic = false;
    }
  }

  if (raw.empty()) scan.failures.push_back(fail_empty(t));
  if (!valid.empty()) {
    const int comps = touched_count - merges;
    if (comps == 1)
      scan.connected = true;
    else
      scan.failures.push_back(fail_disconnected(t, comps, touched_count));
  }
  scan.spanning = touched_count == n;

  sorted_valid.erase(std::unique(sorted_valid.begin(), sorted_valid.end()),
                     sorted_valid.end());
  scan.unique_edges = std::move(sorted_valid);
  return scan;
}

// Assembles the report from per-tree scans plus the cross-tree occurrence
// walk. `shared` and `missing` must arrive in ascending edge order.
VerificationReport assemble(const TreeCover& cover,
                            std::vector<TreeScan> scans,
                            std::vector<std::string> shared_failures,
                            std::vector<std::string> missing_failures,
                            bool any_shared, bool any_missing) {
  VerificationReport rep;
  rep.all_acyclic = true;
  rep.all_connected = true;
  bool any_bad_edge = false;
  for (size_t t = 0; t < scans.size(); ++t) {
    const TreeScan& s = scans[t];
    rep.all_acyclic = rep.all_acyclic && s.acyclic;
    rep.all_connected = rep.all_connected && s.connected;
    rep.spanning_flags.push_back(s.spanning);
    any_bad_edge = any_bad_edge || s.has_bad_edge;
    rep.failures.insert(rep.failures.end(), s.failures.begin(),
                        s.failures.end());
  }
  rep.pairwise_disjoint = !any_shared;
  rep.covers_all_edges = !any_missing && !any_bad_edge;
  rep.failures.insert(rep.failures.end(), shared_failures.begin(),
                      shared_failures.end());
  rep.failures.insert(rep.failures.end(), missing_failures.begin(),
                      missing_failures.end());

  const int tau = tree_cover_number(cover.n);
  rep.count_equals_tau = static_cast<int>(cover.trees.size()) == tau;
  if (!rep.count_equals_tau)
    rep.failures.push_back(fail_count(cover.trees.size(), tau));

  SizeSequence got;
  got.reserve(cover.trees.size());
  for (const auto& tree : cover.trees)
    got.push_back(static_cast<long long>(tree.size()));
  SizeSequence expected = cover_size_sequence(cover.n);
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  rep.sizes_match = got == expected;
  if (!rep.sizes_match) {
    if (got.size() != expected.size()) {
      rep.failures.push_back("size sequence has " + std::to_string(got.size()) +
                             " entries, expected " +
                             std::to_string(expected.size()));
    } else {
      for (size_t i = 0; i < got.size(); ++i) {
        if (got[i] != expected[i]) {
          rep.failures.push_back(
              "sorted tree sizes differ at position " + std::to_string(i) +
              ": got " + std::to_string(got[i]) + ", expected " +
              std::to_string(expected[i]));
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace

bool is_tree(std::span<const Edge> edges) {
  if (edges.empty()) return false;
  std::vector<int> verts;
  verts.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    if (e.u == e.v) return false;
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const auto rank = [&](int v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                            verts.begin());
  };
  Dsu dsu(static_cast<int>(verts.size()));
  for (const Edge& e : edges)
    if (!dsu.unite(rank(e.u), rank(e.v))) return false;
  return edges.size() == verts.size() - 1;
}

VerificationReport verify_cover_reference(const TreeCover& cover) {
  if (cover.n < 3)
    throw std::invalid_argument("verify_cover: cover order must be >= 3");
  const int n = cover.n;

  std::vector<TreeScan> scans;
  scans.reserve(cover.trees.size());
  for (size_t t = 0; t < cover.trees.size(); ++t)
    scans.push_back(scan_tree_definitional(n, static_cast<int>(t),
                                           cover.trees[t]));

  // Ordered map keyed by edge: iteration order is ascending edge order.
  std::map<Edge, std::vector<int>> occurrences;
  for (size_t t = 0; t < scans.size(); ++t)
    for (Edge e : scans[t].unique_edges)
      occurrences[e].push_back(static_cast<int>(t));

  std::vector<std::string> shared;
  bool any_shared = false;
  for (const auto& [e, in_trees] : occurrences) {
    if (in_trees.size() >= 2) {
      any_shared = true;
      shared.push_back(fail_shared(e, in_trees[0], in_trees[1]));
    }
  }
  std::vector<std::string> missing;
  bool any_missing = false;
  for (Edge e : enumerate_edges(n)) {
    if (occurrences.find(e) == occurrences.end()) {
      any_missing = true;
      missing.push_back(fail_missing(e));
    }
  }

  return assemble(cover, std::move(scans), std::move(shared),
                  std::move(missing), any_shared, any_missing);
}

namespace {

VerificationReport verify_indexed(const TreeCover& cover, bool parallel) {
  if (cover.n < 3)
    throw std::invalid_argument("verify_cover: cover order must be >= 3");
  const int n = cover.n;
  const long long m = complete_edge_count(n);
  const auto tree_count = static_cast<long long>(cover.trees.size());

  std::vector<TreeScan> scans(cover.trees.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long long t = 0; t < tree_count; ++t)
    scans[t] = scan_tree_dsu(n, static_cast<int>(t), cover.trees[t]);

  // Dense occurrence table over edge indices; filled in tree order so the
  // first two occupants of a slot are deterministic.
  std::vector<int> first_tree(m, -1);
  std::vector<int> second_tree(m, -1);
  for (size_t t = 0; t < scans.size(); ++t) {
    for (Edge e : scans[t].unique_edges) {
      const long long idx = edge_index(e.u, e.v, n);
      if (first_tree[idx] == -1)
        first_tree[idx] = static_cast<int>(t);
      else if (second_tree[idx] == -1)
        second_tree[idx] = static_cast<int>(t);
    }
  }

  std::vector<std::string> shared;
  std::vector<std::string> missing;
  bool any_shared = false;
  bool any_missing = false;
  long long idx = 0;
  for (int u = 1; u < n; ++u) {
    for (int v = u + 1; v <= n; ++v, ++idx) {
      if (second_tree[idx] != -1) {
        any_shared = true;
        shared.push_back(
            fail_shared({u, v}, first_tree[idx], second_tree[idx]));
      } else if (first_tree[idx] == -1) {
        any_missing = true;
        missing.push_back(fail_missing({u, v}));
      }
    }
  }

  return assemble(cover, std::move(scans), std::move(shared),
                  std::move(missing), any_shared, any_missing);
}

}  // namespace

VerificationReport verify_cover(const TreeCover& cover) {
  return verify_indexed(cover, /*parallel=*/false);
}

VerificationReport verify_cover_parallel(const TreeCover& cover) {
  return verify_indexed(cover, /*parallel=*/true);
}

namespace {

// Backtracking assignment of the edges of K_n (lexicographic order) to k
// trees. Cycles are pruned with per-tree union-find (no path compression,
// so undo is O(1)); label symmetry is broken by allowing at most the
// first empty tree to receive an edge.
class CoverSearch {
 public:
  CoverSearch(int n, int k)
      : n_(n),
        k_(k),
        edges_(enumerate_edges(n)),
        parent_(k, std::vector<int>(n + 1)),
        size_(k, std::vector<int>(n + 1, 1)),
        touched_(k, std::vector<char>(n + 1, 0)),
        touched_count_(k, 0),
        edge_count_(k, 0) {
    for (int t = 0; t < k; ++t)
      for (int v = 1; v <= n; ++v) parent_[t][v] = v;
  }

  bool run() { return place(0, 0); }

 private:
  int find(int t, int v) const {
    while (parent_[t][v] != v) v = parent_[t][v];
    return v;
  }

  bool place(size_t idx, int used) {
    if (idx == edges_.size()) {
      // acyclicity held throughout; a forest is a tree iff its edge
      // count is one less than its touched vertex count
      for (int t = 0; t < k_; ++t)
        if (edge_count_[t] == 0 || edge_count_[t] != touched_count_[t] - 1)
          return false;
      return true;
    }
    const Edge e = edges_[idx];
    const int limit = std::min(used + 1, k_);
    for (int t = 0; t < limit; ++t) {
      int ru = find(t, e.u);
      int rv = find(t, e.v);
      if (ru == rv) continue;
      if (size_[t][ru] < size_[t][rv]) std::swap(ru, rv);
      parent_[t][rv] = ru;
      size_[t][ru] += size_[t][rv];
      const bool was_empty = edge_count_[t] == 0;
      ++edge_count_[t];
      const bool new_u = !touched_[t][e.u];
      const bool new_v = !touched_[t][e.v];
      if (new_u) touched_[t][e.u] = 1, ++touched_count_[t];
      if (new_v) touched_[t][e.v] = 1, ++touched_count_[t];

      if (place(idx + 1, used + (was_empty ? 1 : 0))) return true;

      if (new_v) touched_[t][e.v] = 0, --touched_count_[t];
      if (new_u) touched_[t][e.u] = 0, --touched_count_[t];
      --edge_count_[t];
      size_[t][ru] -= size_[t][rv];
      parent_[t][rv] = rv;
    }
    return false;
  }

  int n_;
  int k_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> parent_;
  std::vector<std::vector<int>> size_;
  std::vector<std::vector<char>> touched_;
  std::vector<int> touched_count_;
  std::vector<int> edge_count_;
};

}  // namespace

int brute_force_min_trees(int n) {
  if (n < 3 || n > 6)
    throw std::invalid_argument("brute_force_min_trees: n must be in 3..6");
  const long long m = complete_edge_count(n);
  // k = m always succeeds (one edge per tree), so this terminates.
  for (int k = 1; k <= m; ++k)
    if (CoverSearch(n, k).run()) return k;
  return -1;
}

}  // namespace deck
