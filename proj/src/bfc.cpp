#include "forestcover/bfc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "forestcover/errors.hpp"

namespace forestcover {

namespace {

constexpr double kSlack = 1e-12;

void sort_trees(std::vector<Tree>& trees) {
  std::sort(trees.begin(), trees.end(), [](const Tree& a, const Tree& b) {
    if (a.vertices.front() != b.vertices.front()) return a.vertices.front() < b.vertices.front();
    return a.edges < b.edges;
  });
}

// Finds one detachable piece of weight in [beta, 2 beta) in the tree spanned
// by `edges`, which must weigh more than 2 beta.
std::vector<EdgeId> detach_piece(const Graph& graph, const std::vector<EdgeId>& edges, double beta) {
  const int n = graph.vertex_count();
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(static_cast<std::size_t>(n));
  VertexId root = n;
  for (EdgeId e : edges) {
    const Edge& edge = graph.edge(e);
    adj[edge.u].emplace_back(edge.v, e);
    adj[edge.v].emplace_back(edge.u, e);
    root = std::min({root, edge.u, edge.v});
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  // Iterative DFS for parent pointers and a post-order.
  std::vector<VertexId> parent(static_cast<std::size_t>(n), -1);
  std::vector<EdgeId> parent_edge(static_cast<std::size_t>(n), -1);
  std::vector<VertexId> preorder;
  std::vector<VertexId> stack{root};
  parent[root] = root;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    preorder.push_back(v);
    for (auto it = adj[v].rbegin(); it != adj[v].rend(); ++it) {
      if (parent[it->first] != -1) continue;
      parent[it->first] = v;
      parent_edge[it->first] = it->second;
      stack.push_back(it->first);
    }
  }
  std::vector<double> below(static_cast<std::size_t>(n), 0.0);
  std::vector<std::vector<VertexId>> children(static_cast<std::size_t>(n));
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    const VertexId v = *it;
    if (v == root) continue;
    below[parent[v]] += graph.weight(parent_edge[v]) + below[v];
    children[parent[v]].push_back(v);
  }
  for (auto& c : children) std::sort(c.begin(), c.end());

  auto collect_branch = [&](VertexId child, std::vector<EdgeId>& out) {
    std::vector<VertexId> todo{child};
    out.push_back(parent_edge[child]);
    while (!todo.empty()) {
      const VertexId v = todo.back();
      todo.pop_back();
      for (VertexId c : children[v]) {
        out.push_back(parent_edge[c]);
        todo.push_back(c);
      }
    }
  };

  // The first post-order vertex whose subtree reaches beta: every child
  // subtree is lighter than beta, so each branch weighs less than 2 beta.
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    const VertexId v = *it;
    if (below[v] < beta - kSlack) continue;
    std::vector<EdgeId> piece;
    for (VertexId c : children[v]) {
      if (graph.weight(parent_edge[c]) + below[c] >= beta - kSlack) {
        collect_branch(c, piece);
        return piece;
      }
    }
    double acc = 0.0;
    for (VertexId c : children[v]) {
      collect_branch(c, piece);
      acc += graph.weight(parent_edge[c]) + below[c];
      if (acc >= beta - kSlack) return piece;
    }
  }
  throw SolverError("edge_decompose: no detachable piece found");
}

}  // namespace

Graph transform_weights(const Graph& graph, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InstanceError("lambda must be positive and finite");
  std::vector<double> w(static_cast<std::size_t>(graph.edge_count()));
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const double we = graph.weight(e);
    if (we > lambda) {
      std::ostringstream msg;
      msg << "edge " << e << ": weight " << we << " exceeds lambda " << lambda;
      throw InstanceError(msg.str());
    }
    w[e] = we > lambda / 2.0 ? 1.0 : std::min(1.0, 2.0 * we / lambda);
  }
  return graph.with_weights(w, WeightMode::fc_normalized);
}

std::vector<Tree> edge_decompose(const Graph& graph, const Tree& tree, double beta) {
  if (!(beta > 0.0)) throw InstanceError("edge_decompose: beta must be positive");
  validate_tree(graph, tree);
  if (tree.edges.empty()) return {tree};
  for (EdgeId e : tree.edges) {
    if (graph.weight(e) > beta + kGraphTolerance) {
      throw InstanceError("edge_decompose: edge " + std::to_string(e) + " heavier than beta");
    }
  }

  std::vector<Tree> out;
  std::vector<EdgeId> rest = tree.edges;
  while (!rest.empty()) {
    double total = 0.0;
    for (EdgeId e : rest) total += graph.weight(e);
    if (total <= 2.0 * beta + kSlack) {
      out.push_back(tree_from_edges(graph, rest));
      break;
    }
    std::vector<EdgeId> piece = detach_piece(graph, rest, beta);
    std::sort(piece.begin(), piece.end());
    std::vector<EdgeId> next;
    std::set_difference(rest.begin(), rest.end(), piece.begin(), piece.end(), std::back_inserter(next));
    out.push_back(tree_from_edges(graph, std::move(piece)));
    rest = std::move(next);
  }
  sort_trees(out);
  return out;
}

BfcSolution bfc_6approx(const Graph& graph, double lambda, const RoundingOptions& options) {
  const Graph transformed = transform_weights(graph, lambda);
  const FcResult fc = lp_rounding_fc(transformed, options);

  BfcSolution sol;
  sol.lambda = lambda;
  sol.transformed_wi = fc.wi;
  sol.transformed_lp_objective = fc.lower_bound.value_or(0.0);
  sol.fc_diagnostics = fc.diagnostics;

  // Dropping a weight-1 edge splits one tree into two: -1 weight, +1 tree.
  std::vector<bool> keep_edge(static_cast<std::size_t>(graph.edge_count()), false);
  std::vector<bool> in_forest(static_cast<std::size_t>(graph.vertex_count()), false);
  for (const Tree& t : fc.forest.trees) {
    for (VertexId v : t.vertices) in_forest[v] = true;
    for (EdgeId e : t.edges) {
      if (transformed.weight(e) < 1.0) keep_edge[e] = true;
      else ++sol.removed_heavy_edges;
    }
  }
  Forest light;
  for (const Component& c : connected_components(transformed, in_forest, keep_edge)) {
    light.trees.push_back(Tree{c.vertices, c.edges});
  }
  sol.transformed_wi_after_split = weighted_index(transformed, light);
  if (std::abs(sol.transformed_wi_after_split - sol.transformed_wi) > kGraphTolerance) {
    throw SolverError("bfc: removing weight-1 edges changed the weighted index");
  }

  for (const Tree& t : light.trees) {
    for (Tree& piece : edge_decompose(transformed, t, 1.0)) sol.trees.push_back(std::move(piece));
  }
  sort_trees(sol.trees);
  for (const Tree& t : sol.trees) {
    if (tree_weight(graph, t) > lambda + kGraphTolerance) {
      throw SolverError("bfc: output tree exceeds lambda");
    }
  }
  return sol;
}

bool is_valid_bfc(const Graph& graph, const std::vector<Tree>& trees, double lambda) {
  std::vector<bool> covered(static_cast<std::size_t>(graph.vertex_count()), false);
  for (const Tree& t : trees) {
    try {
      validate_tree(graph, t);
    } catch (const InvalidForest&) {
      return false;
    }
    if (tree_weight(graph, t) > lambda + kGraphTolerance) return false;
    for (VertexId v : t.vertices) covered[v] = true;
  }
  return is_vertex_cover(graph, covered);
}

}  // namespace forestcover
