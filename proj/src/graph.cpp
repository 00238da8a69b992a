#include "forestcover/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "forestcover/disjoint_set.hpp"
#include "forestcover/errors.hpp"

namespace forestcover {

namespace {

void check_weight(double w, WeightMode mode, EdgeId id) {
  if (!std::isfinite(w)) {
    throw InstanceError("edge " + std::to_string(id) + ": weight is not finite");
  }
  if (mode == WeightMode::fc_normalized && (w < 0.0 || w > 1.0)) {
    std::ostringstream msg;
    msg << "edge " << id << ": weight " << w << " outside [0,1]";
    throw InstanceError(msg.str());
  }
  if (mode == WeightMode::bfc_raw && !(w > 0.0)) {
    std::ostringstream msg;
    msg << "edge " << id << ": weight " << w << " must be positive";
    throw InstanceError(msg.str());
  }
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges, WeightMode mode)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      incident_(static_cast<std::size_t>(std::max(vertex_count, 0))),
      mode_(mode) {
  if (vertex_count < 0) throw InstanceError("negative vertex count");
  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId id = 0; id < edge_count(); ++id) {
    const Edge& e = edges_[id];
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count) {
      throw InstanceError("edge " + std::to_string(id) + ": endpoint out of range");
    }
    if (e.u == e.v) throw InstanceError("edge " + std::to_string(id) + ": self-loop");
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw InstanceError("edge " + std::to_string(id) + ": parallel edge");
    }
    check_weight(e.w, mode, id);
    incident_[e.u].push_back(id);
    incident_[e.v].push_back(id);
  }
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a < 0 || a >= vertex_count_) return std::nullopt;
  for (EdgeId id : incident_[a]) {
    const Edge& e = edges_[id];
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return id;
  }
  return std::nullopt;
}

Graph Graph::with_weights(std::span<const double> weights, WeightMode mode) const {
  if (static_cast<int>(weights.size()) != edge_count()) {
    throw InstanceError("weight vector size does not match edge count");
  }
  std::vector<Edge> edges = edges_;
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].w = weights[i];
  return Graph(vertex_count_, std::move(edges), mode);
}

Tree tree_from_edges(const Graph& graph, std::vector<EdgeId> edges) {
  Tree tree;
  std::sort(edges.begin(), edges.end());
  for (EdgeId id : edges) {
    tree.vertices.push_back(graph.edge(id).u);
    tree.vertices.push_back(graph.edge(id).v);
  }
  std::sort(tree.vertices.begin(), tree.vertices.end());
  tree.vertices.erase(std::unique(tree.vertices.begin(), tree.vertices.end()), tree.vertices.end());
  tree.edges = std::move(edges);
  return tree;
}

Tree singleton_tree(VertexId v) { return Tree{{v}, {}}; }

void validate_tree(const Graph& graph, const Tree& tree) {
  if (tree.vertices.empty()) throw InvalidForest("tree with no vertices");
  std::vector<VertexId> vs = tree.vertices;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
    throw InvalidForest("tree lists a vertex twice");
  }
  for (VertexId v : vs) {
    if (v < 0 || v >= graph.vertex_count()) throw InvalidForest("tree vertex out of range");
  }
  if (tree.edges.size() + 1 != vs.size()) {
    throw InvalidForest("tree edge count must be vertex count minus one");
  }
  auto local = [&](VertexId v) -> int {
    auto it = std::lower_bound(vs.begin(), vs.end(), v);
    if (it == vs.end() || *it != v) return -1;
    return static_cast<int>(it - vs.begin());
  };
  DisjointSet dsu(static_cast<int>(vs.size()));
  std::set<EdgeId> distinct;
  for (EdgeId id : tree.edges) {
    if (id < 0 || id >= graph.edge_count()) throw InvalidForest("tree edge id out of range");
    if (!distinct.insert(id).second) throw InvalidForest("tree lists an edge twice");
    const Edge& e = graph.edge(id);
    const int a = local(e.u);
    const int b = local(e.v);
    if (a < 0 || b < 0) throw InvalidForest("tree edge has an endpoint outside the tree");
    if (!dsu.unite(a, b)) throw InvalidForest("tree contains a cycle");
  }
  // |E| = |V| - 1 and acyclic implies connected.
}

void validate_forest(const Graph& graph, const Forest& forest) {
  std::vector<bool> used(static_cast<std::size_t>(graph.vertex_count()), false);
  for (const Tree& tree : forest.trees) {
    validate_tree(graph, tree);
    for (VertexId v : tree.vertices) {
      if (used[v]) throw InvalidForest("trees overlap at vertex " + std::to_string(v));
      used[v] = true;
    }
  }
}

double tree_weight(const Graph& graph, const Tree& tree) {
  double total = 0.0;
  for (EdgeId id : tree.edges) total += graph.weight(id);
  return total;
}

double weighted_index(const Graph& graph, const Forest& forest) {
  validate_forest(graph, forest);
  double total = static_cast<double>(forest.trees.size());
  for (const Tree& tree : forest.trees) total += tree_weight(graph, tree);
  return total;
}

double weighted_index_by_sizes(const Graph& graph, const Forest& forest) {
  validate_forest(graph, forest);
  double total = 0.0;
  for (const Tree& tree : forest.trees) {
    total += static_cast<double>(tree.vertices.size());
    for (EdgeId id : tree.edges) total -= 1.0 - graph.weight(id);
  }
  return total;
}

bool is_vertex_cover(const Graph& graph, const std::vector<bool>& in_cover) {
  for (const Edge& e : graph.edges()) {
    if (!in_cover[e.u] && !in_cover[e.v]) return false;
  }
  return true;
}

std::vector<bool> vertex_mask(const Graph& graph, const Forest& forest) {
  std::vector<bool> mask(static_cast<std::size_t>(graph.vertex_count()), false);
  for (const Tree& tree : forest.trees) {
    for (VertexId v : tree.vertices) mask[v] = true;
  }
  return mask;
}

bool is_forest_cover(const Graph& graph, const Forest& forest) {
  validate_forest(graph, forest);
  return is_vertex_cover(graph, vertex_mask(graph, forest));
}

std::vector<Component> connected_components(const Graph& graph,
                                            const std::vector<bool>& vertex_filter,
                                            const std::vector<bool>& edge_filter) {
  const int n = graph.vertex_count();
  auto vertex_on = [&](VertexId v) { return vertex_filter.empty() || vertex_filter[v]; };
  auto edge_on = [&](EdgeId id) {
    const Edge& e = graph.edge(id);
    return (edge_filter.empty() || edge_filter[id]) && vertex_on(e.u) && vertex_on(e.v);
  };

  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<Component> out;
  std::vector<VertexId> stack;
  for (VertexId start = 0; start < n; ++start) {
    if (!vertex_on(start) || label[start] >= 0) continue;
    const int c = static_cast<int>(out.size());
    out.emplace_back();
    label[start] = c;
    stack.assign(1, start);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      out[c].vertices.push_back(v);
      for (EdgeId id : graph.incident(v)) {
        if (!edge_on(id)) continue;
        const Edge& e = graph.edge(id);
        const VertexId w = e.u == v ? e.v : e.u;
        if (label[w] < 0) {
          label[w] = c;
          stack.push_back(w);
        }
      }
    }
  }
  for (EdgeId id = 0; id < graph.edge_count(); ++id) {
    if (edge_on(id)) out[label[graph.edge(id).u]].edges.push_back(id);
  }
  for (Component& comp : out) std::sort(comp.vertices.begin(), comp.vertices.end());
  return out;
}

std::vector<Tree> minimum_spanning_forest(const Graph& graph,
                                          std::span<const VertexId> vertices,
                                          std::span<const EdgeId> edges) {
  std::vector<int> local(static_cast<std::size_t>(graph.vertex_count()), -1);
  std::vector<VertexId> vs(vertices.begin(), vertices.end());
  std::sort(vs.begin(), vs.end());
  for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = static_cast<int>(i);

  std::vector<EdgeId> order;
  for (EdgeId id : edges) {
    const Edge& e = graph.edge(id);
    if (local[e.u] >= 0 && local[e.v] >= 0) order.push_back(id);
  }
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    const double wa = graph.weight(a);
    const double wb = graph.weight(b);
    if (wa != wb) return wa < wb;
    return a < b;
  });

  DisjointSet dsu(static_cast<int>(vs.size()));
  std::vector<EdgeId> chosen;
  for (EdgeId id : order) {
    const Edge& e = graph.edge(id);
    if (dsu.unite(local[e.u], local[e.v])) chosen.push_back(id);
  }

  // Group by root; vs is sorted so trees come out ordered by smallest vertex.
  std::vector<int> tree_of(vs.size(), -1);
  std::vector<Tree> trees;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const int root = dsu.find(static_cast<int>(i));
    if (tree_of[root] < 0) {
      tree_of[root] = static_cast<int>(trees.size());
      trees.emplace_back();
    }
    trees[tree_of[root]].vertices.push_back(vs[i]);
  }
  for (EdgeId id : chosen) {
    trees[tree_of[dsu.find(local[graph.edge(id).u])]].edges.push_back(id);
  }
  for (Tree& t : trees) std::sort(t.edges.begin(), t.edges.end());
  return trees;
}

Tree kruskal_mst(const Graph& graph, const Component& component) {
  auto trees = minimum_spanning_forest(graph, component.vertices, component.edges);
  if (trees.size() != 1) throw InstanceError("kruskal_mst: component is not connected");
  return std::move(trees.front());
}

std::vector<EdgeId> induced_edges(const Graph& graph, std::span<const VertexId> vertices) {
  std::vector<bool> in(static_cast<std::size_t>(graph.vertex_count()), false);
  for (VertexId v : vertices) in[v] = true;
  std::vector<EdgeId> out;
  for (EdgeId id = 0; id < graph.edge_count(); ++id) {
    const Edge& e = graph.edge(id);
    if (in[e.u] && in[e.v]) out.push_back(id);
  }
  return out;
}

}  // namespace forestcover
