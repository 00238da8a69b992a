#pragma once

#include <span>
#include <vector>

#include "forestcover/graph.hpp"

namespace forestcover {

struct Matching {
  std::vector<EdgeId> edges;  // ascending

  int size() const noexcept { return static_cast<int>(edges.size()); }
};

// Maximum cardinality matching of the subgraph (vertices, edges) using
// Edmonds' blossom contraction. Edges with an endpoint outside `vertices` are
// ignored. Roots and neighbours are scanned in ascending vertex id, so the
// returned matching is reproducible.
Matching maximum_matching(const Graph& graph, std::span<const VertexId> vertices,
                          std::span<const EdgeId> edges);

// Exhaustive search over edge subsets. Throws BudgetExceeded above
// kBruteForceMatchingMaxEdges selected edges.
inline constexpr int kBruteForceMatchingMaxEdges = 16;
Matching brute_force_matching(const Graph& graph, std::span<const VertexId> vertices,
                              std::span<const EdgeId> edges);

// No two edges share an endpoint.
bool is_matching(const Graph& graph, std::span<const EdgeId> edges);

}  // namespace forestcover
