#include "forestcover/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "forestcover/errors.hpp"

namespace forestcover {

namespace {

void check_budget(const Graph& graph, ExactBudget budget, const char* who) {
  if (graph.vertex_count() > budget.max_n || graph.edge_count() > budget.max_edges) {
    throw BudgetExceeded(std::string(who) + ": instance with " + std::to_string(graph.vertex_count()) +
                         " vertices and " + std::to_string(graph.edge_count()) +
                         " edges exceeds the exact budget (" + std::to_string(budget.max_n) + ", " +
                         std::to_string(budget.max_edges) + ")");
  }
}

std::vector<VertexId> mask_vertices(std::uint32_t mask, int n) {
  std::vector<VertexId> out;
  for (int v = 0; v < n; ++v) {
    if (mask >> v & 1U) out.push_back(v);
  }
  return out;
}

bool covers(const Graph& graph, std::uint32_t mask) {
  for (const Edge& e : graph.edges()) {
    if (!(mask >> e.u & 1U) && !(mask >> e.v & 1U)) return false;
  }
  return true;
}

}  // namespace

ExactFcResult exact_fc(const Graph& graph, ExactBudget budget) {
  check_budget(graph, budget, "exact_fc");
  const int n = graph.vertex_count();

  // Edges that can lower the index (w < 1), in Kruskal order on w.
  std::vector<EdgeId> useful;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (graph.weight(e) < 1.0) useful.push_back(e);
  }

  ExactFcResult best;
  best.wi = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (!covers(graph, mask)) continue;
    const std::vector<VertexId> s = mask_vertices(mask, n);
    Forest forest{minimum_spanning_forest(graph, s, useful)};
    double wi = static_cast<double>(forest.trees.size());
    for (const Tree& t : forest.trees) wi += tree_weight(graph, t);
    const bool better = wi < best.wi - 1e-12 ||
                        (wi <= best.wi + 1e-12 && s < best.cover);
    if (better) {
      best.wi = wi;
      best.cover = s;
      best.forest = std::move(forest);
    }
  }
  return best;
}

ExactBfcResult exact_bfc(const Graph& graph, double lambda, ExactBudget budget) {
  check_budget(graph, budget, "exact_bfc");
  const int n = graph.vertex_count();
  const std::uint32_t full = 1U << n;

  // usable[mask]: G[mask] connected with MST weight <= lambda.
  std::vector<std::uint32_t> usable;
  std::vector<Tree> tree_of(full);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const std::vector<VertexId> s = mask_vertices(mask, n);
    const std::vector<EdgeId> inside = induced_edges(graph, s);
    std::vector<Tree> trees = minimum_spanning_forest(graph, s, inside);
    if (trees.size() != 1) continue;
    if (tree_weight(graph, trees.front()) > lambda + kGraphTolerance) continue;
    tree_of[mask] = std::move(trees.front());
    usable.push_back(mask);
  }

  // Breadth-first over unions of usable sets.
  std::vector<int> dist(full, -1);
  std::vector<std::uint32_t> via(full, 0);
  std::vector<std::uint32_t> from(full, 0);
  std::vector<std::uint32_t> frontier{0};
  dist[0] = 0;
  std::uint32_t goal = full;
  if (covers(graph, 0)) goal = 0;
  while (goal == full && !frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t cur : frontier) {
      for (std::uint32_t s : usable) {
        const std::uint32_t u = cur | s;
        if (dist[u] != -1) continue;
        dist[u] = dist[cur] + 1;
        via[u] = s;
        from[u] = cur;
        next.push_back(u);
        if (goal == full && covers(graph, u)) goal = u;
      }
    }
    frontier = std::move(next);
  }
  if (goal == full) throw SolverError("exact_bfc: no feasible cover found");

  ExactBfcResult out;
  for (std::uint32_t m = goal; m != 0; m = from[m]) out.trees.push_back(tree_of[via[m]]);
  std::sort(out.trees.begin(), out.trees.end(),
            [](const Tree& a, const Tree& b) { return a.vertices < b.vertices; });
  out.count = static_cast<int>(out.trees.size());
  return out;
}

std::optional<SubsetValue> brute_force_separation(const Graph& graph, const FractionalSolution& sol,
                                                  ExactBudget budget) {
  check_budget(graph, budget, "brute_force_separation");
  const int n = graph.vertex_count();
  std::optional<SubsetValue> best;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    double value = 0.0;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1U) value += sol.x[v];
    }
    bool has_edge = false;
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
      const Edge& edge = graph.edge(e);
      if ((mask >> edge.u & 1U) && (mask >> edge.v & 1U)) {
        has_edge = true;
        value -= sol.y[e];
      }
    }
    if (!has_edge) continue;
    if (!best || value < best->value - 1e-12) best = SubsetValue{mask_vertices(mask, n), value};
  }
  return best;
}

}  // namespace forestcover
