#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forestcover/graph.hpp"
#include "forestcover/lp_relaxation.hpp"

namespace forestcover {

// Sparse assignment to the dual of the forest cover LP:
//   max  sum z_e + sum z_S
//   sum_{e ni u} z_e + sum_{e ni u} z_ue + sum_{S ni u} z_S <= 1     (each vertex u)
//   sum_{S contains e} z_S + z_ue + z_ve >= 1 - w_e                  (each edge e)
struct DualCertificate {
  std::vector<double> z_edge;                          // indexed by edge id; may be empty (all zero)
  std::map<std::pair<VertexId, EdgeId>, double> z_vertex_edge;
  std::vector<std::pair<std::vector<VertexId>, double>> z_sets;

  double bound() const;
};

// Both dual constraint families, non-negativity, and E(S) != {} for every
// weighted set, all within 1e-9.
bool check_dual_feasibility(const Graph& graph, const DualCertificate& cert);

struct FcDiagnostics {
  // randomized
  int experiments_full = 0;    // m before capping
  int experiments_run = 0;
  bool cap_hit = false;        // the run is heuristic when true
  double mean_dual_bound = 0.0;
  int selected_experiment = -1;
  double selected_experiment_objective = 0.0;
  // LP rounding
  int lp_iterations = 0;
  int lp_cuts = 0;
  double lp_objective = 0.0;
  // binary
  int components = 0;
  int matching_size = 0;

  double elapsed_ms = 0.0;
};

struct FcResult {
  Forest forest;
  double wi = 0.0;
  std::optional<double> lower_bound;
  std::string method;
  FcDiagnostics diagnostics;
};

struct BinaryOutcome {
  FcResult result;
  DualCertificate certificate;
};

// Binary-weight 2-approximation. A spanning tree of every component of the
// weight-0 subgraph, plus one two-vertex tree per edge of a maximum matching
// among the remaining vertices. Throws InstanceError on a non-binary weight.
BinaryOutcome forest_cover_binary(const Graph& graph);

struct ExperimentOutcome {
  std::uint64_t seed = 0;
  int index = 0;
  std::vector<std::uint8_t> indicator;  // W_e, 1 with probability 1 - w_e
  Forest forest;
  double experiment_objective = 0.0;    // weighted index under weights 1 - W_e
  double true_wi = 0.0;                 // weighted index under the original weights
  double dual_bound = 0.0;
};

// One experiment of the randomized algorithm: draw W, run the binary
// algorithm on weights 1 - W, evaluate the forest on the original graph.
ExperimentOutcome run_experiment(const Graph& graph, std::uint64_t seed, int index);

struct RandomizedOptions {
  double epsilon = 0.5;
  std::uint64_t seed = 1;
  std::optional<int> max_experiments;  // defaults to kDefaultExperimentCap
};

inline constexpr int kDefaultExperimentCap = 10000;

// ceil(edges / (2 delta^2)) with delta = epsilon^2, at least 1.
int full_experiment_count(int edge_count, double epsilon);

// (2 + epsilon) randomized algorithm: the best forest, by true weighted index,
// over the experiments. Ties go to the lowest experiment index.
FcResult randomized_fc(const Graph& graph, const RandomizedOptions& options);

struct RoundingOptions {
  bool fixed_point_pruning = false;
  CuttingPlaneOptions lp;
  CuttingPlaneResult* lp_trace = nullptr;  // receives the final LP state when set
};

// Vertices with x* at or above this count as "high" during rounding. The slack
// matches the LP feasibility tolerance so a cover row met within tolerance
// still has a high endpoint.
inline constexpr double kHighThreshold = 0.5 - kLpFeasibilityTolerance;
inline constexpr double kSupportThreshold = 1e-9;

// Rounds an LP optimum: support subgraph, isolated high vertices kept as
// singletons, an MST per nonempty component, then low pendant vertices of the
// MST removed (single pass unless fixed_point is set).
Forest round_lp_solution(const Graph& graph, const FractionalSolution& sol, bool fixed_point = false);

// Deterministic LP-rounding 2-approximation; lower_bound is the LP optimum.
FcResult lp_rounding_fc(const Graph& graph, const RoundingOptions& options = {});

}  // namespace forestcover
