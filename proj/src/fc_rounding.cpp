#include <algorithm>
#include <chrono>

#include "forestcover/fc_algorithms.hpp"

namespace forestcover {

namespace {

// Removes low pendant vertices (and their edge) from `tree`. One pass looks
// only at the pendants of the tree as given.
Tree prune_pendants(const Graph& graph, const FractionalSolution& sol, Tree tree, bool fixed_point) {
  while (tree.vertices.size() > 1) {
    std::vector<int> degree(static_cast<std::size_t>(graph.vertex_count()), 0);
    for (EdgeId e : tree.edges) {
      ++degree[graph.edge(e).u];
      ++degree[graph.edge(e).v];
    }
    std::vector<bool> drop(static_cast<std::size_t>(graph.vertex_count()), false);
    int dropped = 0;
    for (VertexId v : tree.vertices) {
      if (degree[v] == 1 && sol.x[v] < kHighThreshold) {
        drop[v] = true;
        ++dropped;
      }
    }
    if (dropped == 0) break;
    if (dropped == static_cast<int>(tree.vertices.size())) {
      // Only reachable on a single edge with both ends low, which a cover row
      // met within tolerance rules out; keep the higher endpoint.
      const VertexId a = tree.vertices[0];
      const VertexId b = tree.vertices[1];
      return singleton_tree(sol.x[a] >= sol.x[b] ? a : b);
    }
    Tree next;
    for (VertexId v : tree.vertices) {
      if (!drop[v]) next.vertices.push_back(v);
    }
    for (EdgeId e : tree.edges) {
      if (!drop[graph.edge(e).u] && !drop[graph.edge(e).v]) next.edges.push_back(e);
    }
    tree = std::move(next);
    if (!fixed_point) break;
  }
  return tree;
}

}  // namespace

Forest round_lp_solution(const Graph& graph, const FractionalSolution& sol, bool fixed_point) {
  const int n = graph.vertex_count();
  const int m = graph.edge_count();
  std::vector<bool> support_vertex(static_cast<std::size_t>(n));
  std::vector<bool> support_edge(static_cast<std::size_t>(m));
  for (VertexId v = 0; v < n; ++v) support_vertex[v] = sol.x[v] > kSupportThreshold;
  for (EdgeId e = 0; e < m; ++e) support_edge[e] = sol.y[e] > kSupportThreshold;

  Forest forest;
  for (const Component& comp : connected_components(graph, support_vertex, support_edge)) {
    if (comp.edges.empty()) {
      const VertexId v = comp.vertices.front();
      if (sol.x[v] >= kHighThreshold) forest.trees.push_back(singleton_tree(v));
      continue;
    }
    forest.trees.push_back(prune_pendants(graph, sol, kruskal_mst(graph, comp), fixed_point));
  }
  std::sort(forest.trees.begin(), forest.trees.end(),
            [](const Tree& a, const Tree& b) { return a.vertices.front() < b.vertices.front(); });
  return forest;
}

FcResult lp_rounding_fc(const Graph& graph, const RoundingOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const CuttingPlaneResult lp = cutting_plane_solve(graph, options.lp);
  if (options.lp_trace) *options.lp_trace = lp;

  FcResult result;
  result.method = "round";
  result.forest = round_lp_solution(graph, lp.solution, options.fixed_point_pruning);
  result.wi = weighted_index(graph, result.forest);
  result.lower_bound = lp.solution.objective;
  result.diagnostics.lp_iterations = lp.iterations;
  result.diagnostics.lp_cuts = static_cast<int>(lp.cuts.size());
  result.diagnostics.lp_objective = lp.solution.objective;
  result.diagnostics.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace forestcover
