#pragma once

#include <vector>

#include "forestcover/fc_algorithms.hpp"
#include "forestcover/graph.hpp"

namespace forestcover {

// Trees in original edge ids. Trees may share vertices (they come from edge
// decompositions); their vertex union covers every edge.
struct BfcSolution {
  std::vector<Tree> trees;
  double lambda = 0.0;

  // Weighted index of the rounded forest in the transformed graph, before and
  // after dropping weight-1 edges (equal by construction), and its LP bound.
  double transformed_wi = 0.0;
  double transformed_wi_after_split = 0.0;
  double transformed_lp_objective = 0.0;
  int removed_heavy_edges = 0;
  FcDiagnostics fc_diagnostics;

  int count() const noexcept { return static_cast<int>(trees.size()); }
};

// w' = 1 if w > lambda / 2, else 2 w / lambda. Result is FC-normalized.
// Throws InstanceError if lambda <= 0 or some w > lambda.
Graph transform_weights(const Graph& graph, double lambda);

// Splits the edges of `tree` into subtrees of weight at most 2 * beta, at most
// max(w(T) / beta, 1) of them, using `graph`'s weights. Requires every edge
// weight <= beta (InstanceError otherwise). A singleton comes back unchanged.
std::vector<Tree> edge_decompose(const Graph& graph, const Tree& tree, double beta);

// 6-approximation: transform, LP-round in the transformed graph, drop weight-1
// edges, decompose each tree with beta = 1.
BfcSolution bfc_6approx(const Graph& graph, double lambda, const RoundingOptions& options = {});

// Per-tree weight <= lambda (plus 1e-9), tree validity, and vertex cover.
bool is_valid_bfc(const Graph& graph, const std::vector<Tree>& trees, double lambda);

}  // namespace forestcover
