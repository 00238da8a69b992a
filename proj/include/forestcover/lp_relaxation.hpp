#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "forestcover/graph.hpp"
#include "forestcover/simplex.hpp"

namespace forestcover {

// A subset constraint  sum_{i in S} x_i - sum_{e in E(S)} y_e >= 1.
struct SubsetCut {
  std::vector<VertexId> vertices;  // ascending

  friend bool operator==(const SubsetCut&, const SubsetCut&) = default;
};

struct FractionalSolution {
  std::vector<double> x;  // per vertex
  std::vector<double> y;  // per edge
  double objective = 0.0;
};

// The forest cover LP relaxation:
//   min  sum x_u - sum (1 - w_e) y_e
//   x_u + x_v >= 1, x_u >= y_e, x_v >= y_e   for every edge e = (u, v)
//   x_u <= 1 (y_e <= 1 follows from the linkage rows)
//   one subset row per pooled cut.
class LpModel {
 public:
  explicit LpModel(const Graph& graph) : graph_(&graph) {}
  explicit LpModel(Graph&&) = delete;  // the model keeps a reference

  const Graph& graph() const noexcept { return *graph_; }
  std::span<const SubsetCut> cuts() const noexcept { return cuts_; }

  // Throws InstanceError if the set induces no edge.
  void add_cut(SubsetCut cut);
  bool contains_cut(const SubsetCut& cut) const;

  int x_var(VertexId v) const noexcept { return v; }
  int y_var(EdgeId e) const noexcept { return graph_->vertex_count() + e; }

  LinearProgram to_linear_program() const;

 private:
  const Graph* graph_;
  std::vector<SubsetCut> cuts_;
};

// Feasibility tolerance a solved model must meet on every row.
inline constexpr double kLpFeasibilityTolerance = 1e-7;

// Solves the current model; throws SolverError if the backend does not report
// an optimum or the returned point breaks a row by more than the tolerance.
FractionalSolution solve_base_lp(const LpModel& model, LpBackend& backend);
FractionalSolution solve_base_lp(const LpModel& model);

// sum_{i in S} x_i - sum_{e in E(S)} y_e.
double subset_value(const Graph& graph, const FractionalSolution& sol,
                    std::span<const VertexId> vertices);

struct SubsetMinimizer {
  std::vector<VertexId> vertices;  // ascending, contains both anchor endpoints
  double value = 0.0;
  EdgeId anchor = -1;
};

// Minimises subset_value over all S containing both endpoints of `anchor` by a
// project-selection min cut: source -> edge node (y_e), edge node -> its two
// endpoint nodes (inf), vertex node -> sink (x_i), source -> s and t (inf).
SubsetMinimizer minimize_subset_through(const Graph& graph, const FractionalSolution& sol,
                                        EdgeId anchor);

// One minimiser per edge, in edge-id order.
std::vector<SubsetMinimizer> separation_sweep(const Graph& graph, const FractionalSolution& sol);

// Global minimum of subset_value over all S with E(S) nonempty (lowest anchor
// on ties); nullopt when the graph has no edges.
std::optional<SubsetMinimizer> minimum_subset(const Graph& graph, const FractionalSolution& sol);

// The minimising set if it is violated by more than `tol`, else nullopt.
std::optional<SubsetMinimizer> separation_oracle(const Graph& graph, const FractionalSolution& sol,
                                                 double tol = 1e-7);

struct CuttingPlaneOptions {
  double violation_tolerance = 1e-7;
  int max_iterations = 0;            // 0 means 10 * n^2 (at least 10)
  bool add_all_violated = true;      // every distinct violated minimiser of a sweep, else only the best
};

struct CuttingPlaneResult {
  FractionalSolution solution;
  std::vector<SubsetCut> cuts;
  int iterations = 0;
};

// Simplex over the base rows with lazily separated subset cuts until the
// oracle finds nothing. Throws SolverError when the iteration cap is reached.
CuttingPlaneResult cutting_plane_solve(const Graph& graph, const CuttingPlaneOptions& options,
                                       LpBackend& backend);
CuttingPlaneResult cutting_plane_solve(const Graph& graph, const CuttingPlaneOptions& options = {});

// Text dump, one "S = {ids}: lhs" line per pooled cut followed by the final
// x and y values. Ids are 1-based to match instance files.
std::string format_cut_report(const Graph& graph, const CuttingPlaneResult& result);

}  // namespace forestcover
