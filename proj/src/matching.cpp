#include "forestcover/matching.hpp"

#include <algorithm>
#include <queue>

#include "forestcover/errors.hpp"

namespace forestcover {

namespace {

struct LocalSubgraph {
  std::vector<VertexId> to_global;      // local index -> vertex id
  std::vector<std::vector<int>> adj;    // ascending local neighbours
  std::vector<std::vector<EdgeId>> eid; // parallel to adj
  std::vector<EdgeId> edges;            // filtered edge list
};

LocalSubgraph restrict(const Graph& graph, std::span<const VertexId> vertices,
                       std::span<const EdgeId> edges) {
  LocalSubgraph sub;
  sub.to_global.assign(vertices.begin(), vertices.end());
  std::sort(sub.to_global.begin(), sub.to_global.end());
  sub.to_global.erase(std::unique(sub.to_global.begin(), sub.to_global.end()), sub.to_global.end());
  std::vector<int> local(static_cast<std::size_t>(graph.vertex_count()), -1);
  for (std::size_t i = 0; i < sub.to_global.size(); ++i) local[sub.to_global[i]] = static_cast<int>(i);

  const std::size_t n = sub.to_global.size();
  std::vector<std::vector<std::pair<int, EdgeId>>> nb(n);
  for (EdgeId id : edges) {
    const Edge& e = graph.edge(id);
    const int a = local[e.u];
    const int b = local[e.v];
    if (a < 0 || b < 0) continue;
    nb[a].emplace_back(b, id);
    nb[b].emplace_back(a, id);
    sub.edges.push_back(id);
  }
  std::sort(sub.edges.begin(), sub.edges.end());
  sub.edges.erase(std::unique(sub.edges.begin(), sub.edges.end()), sub.edges.end());
  sub.adj.resize(n);
  sub.eid.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(nb[v].begin(), nb[v].end());
    nb[v].erase(std::unique(nb[v].begin(), nb[v].end()), nb[v].end());
    for (auto [w, id] : nb[v]) {
      sub.adj[v].push_back(w);
      sub.eid[v].push_back(id);
    }
  }
  return sub;
}

// Edmonds' algorithm with explicit blossom bases; one BFS per exposed root.
class Blossom {
 public:
  explicit Blossom(const std::vector<std::vector<int>>& adj)
      : adj_(adj),
        n_(static_cast<int>(adj.size())),
        match_(adj.size(), -1),
        parent_(adj.size(), -1),
        base_(adj.size()),
        used_(adj.size(), false),
        in_blossom_(adj.size(), false) {}

  const std::vector<int>& solve() {
    // Greedy warm start in ascending order.
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int w : adj_[v]) {
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      const int end = find_path(root);
      if (end == -1) continue;
      int v = end;
      while (v != -1) {
        const int pv = parent_[v];
        const int ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const std::vector<std::vector<int>>& adj_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace

Matching maximum_matching(const Graph& graph, std::span<const VertexId> vertices,
                          std::span<const EdgeId> edges) {
  const LocalSubgraph sub = restrict(graph, vertices, edges);
  Blossom solver(sub.adj);
  const std::vector<int>& mate = solver.solve();
  Matching out;
  for (std::size_t v = 0; v < sub.adj.size(); ++v) {
    const int w = mate[v];
    if (w < static_cast<int>(v)) continue;
    const auto& nbrs = sub.adj[v];
    const auto pos = std::lower_bound(nbrs.begin(), nbrs.end(), w) - nbrs.begin();
    out.edges.push_back(sub.eid[v][static_cast<std::size_t>(pos)]);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

Matching brute_force_matching(const Graph& graph, std::span<const VertexId> vertices,
                              std::span<const EdgeId> edges) {
  const LocalSubgraph sub = restrict(graph, vertices, edges);
  const int m = static_cast<int>(sub.edges.size());
  if (m > kBruteForceMatchingMaxEdges) {
    throw BudgetExceeded("brute_force_matching: " + std::to_string(m) + " edges exceeds budget");
  }
  std::vector<EdgeId> best;
  std::vector<int> used(static_cast<std::size_t>(graph.vertex_count()), 0);
  std::vector<EdgeId> current;
  // Depth-first over edges: take or skip.
  auto dfs = [&](auto&& self, int i) -> void {
    if (current.size() + static_cast<std::size_t>(m - i) <= best.size()) return;
    if (i == m) {
      best = current;
      return;
    }
    const Edge& e = graph.edge(sub.edges[i]);
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      current.push_back(sub.edges[i]);
      self(self, i + 1);
      current.pop_back();
      used[e.u] = used[e.v] = 0;
    }
    self(self, i + 1);
  };
  dfs(dfs, 0);
  return Matching{best};
}

bool is_matching(const Graph& graph, std::span<const EdgeId> edges) {
  std::vector<bool> used(static_cast<std::size_t>(graph.vertex_count()), false);
  for (EdgeId id : edges) {
    const Edge& e = graph.edge(id);
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = true;
  }
  return true;
}

}  // namespace forestcover
