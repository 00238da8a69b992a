#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace forestcover {

using VertexId = int;
using EdgeId = int;

// Absolute tolerance for weight and index comparisons in this module.
inline constexpr double kGraphTolerance = 1e-9;

enum class WeightMode {
  fc_normalized,  // every weight in [0, 1]
  bfc_raw,        // every weight > 0
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double w = 0.0;
};

// Undirected simple graph on vertices 0..n-1. Edge ids are positions in the
// constructor's edge list. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Throws InstanceError on self-loops, parallel edges, out-of-range
  // endpoints, or weights outside the range allowed by `mode`.
  Graph(int vertex_count, std::vector<Edge> edges,
        WeightMode mode = WeightMode::fc_normalized);

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  WeightMode mode() const noexcept { return mode_; }

  const Edge& edge(EdgeId id) const { return edges_.at(static_cast<std::size_t>(id)); }
  double weight(EdgeId id) const { return edge(id).w; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Incident edge ids of `v`, ascending.
  std::span<const EdgeId> incident(VertexId v) const {
    return incident_.at(static_cast<std::size_t>(v));
  }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  // Same topology, new weights (one per edge id), validated against `mode`.
  Graph with_weights(std::span<const double> weights, WeightMode mode) const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  WeightMode mode_ = WeightMode::fc_normalized;
};

// A tree given by its vertex and edge ids, both kept sorted ascending.
struct Tree {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  friend bool operator==(const Tree&, const Tree&) = default;
};

struct Forest {
  std::vector<Tree> trees;

  friend bool operator==(const Forest&, const Forest&) = default;
};

// Builds a tree from an edge set; the vertex set is the set of endpoints.
Tree tree_from_edges(const Graph& graph, std::vector<EdgeId> edges);
Tree singleton_tree(VertexId v);

// Throws InvalidForest unless `tree` is connected, acyclic, and every edge has
// both endpoints among its vertices.
void validate_tree(const Graph& graph, const Tree& tree);

// validate_tree on every tree plus pairwise vertex-disjointness.
void validate_forest(const Graph& graph, const Forest& forest);

double tree_weight(const Graph& graph, const Tree& tree);

// Sum of forest edge weights plus the number of trees. Validates first.
double weighted_index(const Graph& graph, const Forest& forest);

// The same quantity via sum of tree sizes minus sum of (1 - w_e).
double weighted_index_by_sizes(const Graph& graph, const Forest& forest);

bool is_vertex_cover(const Graph& graph, const std::vector<bool>& in_cover);

// True iff the forest's vertices cover every edge. Validates first.
bool is_forest_cover(const Graph& graph, const Forest& forest);

std::vector<bool> vertex_mask(const Graph& graph, const Forest& forest);

struct Component {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

// Maximal connected pieces of the subgraph made of the selected vertices and
// the selected edges whose endpoints are both selected. Components are ordered
// by their smallest vertex id. Empty masks select everything.
std::vector<Component> connected_components(const Graph& graph,
                                            const std::vector<bool>& vertex_filter,
                                            const std::vector<bool>& edge_filter);

// Kruskal over `edges` restricted to `vertices`, ordered by (weight, edge id).
// Returns one tree per connected piece, ordered by smallest vertex id.
std::vector<Tree> minimum_spanning_forest(const Graph& graph,
                                          std::span<const VertexId> vertices,
                                          std::span<const EdgeId> edges);

// Minimum spanning tree of a component; throws InstanceError if it is not
// connected through its edges.
Tree kruskal_mst(const Graph& graph, const Component& component);

// Edges of `graph` with both endpoints inside `vertices`.
std::vector<EdgeId> induced_edges(const Graph& graph, std::span<const VertexId> vertices);

}  // namespace forestcover
