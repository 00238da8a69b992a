#include "forestcover/lp_relaxation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "forestcover/errors.hpp"
#include "forestcover/max_flow.hpp"

namespace forestcover {

void LpModel::add_cut(SubsetCut cut) {
  std::sort(cut.vertices.begin(), cut.vertices.end());
  cut.vertices.erase(std::unique(cut.vertices.begin(), cut.vertices.end()), cut.vertices.end());
  if (induced_edges(*graph_, cut.vertices).empty()) {
    throw InstanceError("subset cut induces no edge");
  }
  cuts_.push_back(std::move(cut));
}

bool LpModel::contains_cut(const SubsetCut& cut) const {
  return std::find(cuts_.begin(), cuts_.end(), cut) != cuts_.end();
}

LinearProgram LpModel::to_linear_program() const {
  const Graph& g = *graph_;
  LinearProgram lp;
  lp.variable_count = g.vertex_count() + g.edge_count();
  lp.objective.assign(static_cast<std::size_t>(lp.variable_count), 0.0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) lp.objective[x_var(v)] = 1.0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) lp.objective[y_var(e)] = -(1.0 - g.weight(e));

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    lp.rows.push_back({{{x_var(edge.u), 1.0}, {x_var(edge.v), 1.0}}, RowSense::greater_equal, 1.0});
    lp.rows.push_back({{{x_var(edge.u), 1.0}, {y_var(e), -1.0}}, RowSense::greater_equal, 0.0});
    lp.rows.push_back({{{x_var(edge.v), 1.0}, {y_var(e), -1.0}}, RowSense::greater_equal, 0.0});
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    lp.rows.push_back({{{x_var(v), 1.0}}, RowSense::less_equal, 1.0});
  }
  for (const SubsetCut& cut : cuts_) {
    LinearRow row;
    row.sense = RowSense::greater_equal;
    row.rhs = 1.0;
    for (VertexId v : cut.vertices) row.terms.emplace_back(x_var(v), 1.0);
    for (EdgeId e : induced_edges(g, cut.vertices)) row.terms.emplace_back(y_var(e), -1.0);
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

FractionalSolution solve_base_lp(const LpModel& model, LpBackend& backend) {
  const Graph& g = model.graph();
  const LinearProgram lp = model.to_linear_program();
  const LpResult r = backend.solve(lp);
  if (r.status != LpStatus::optimal) {
    throw SolverError(std::string("LP backend returned ") + to_string(r.status));
  }
  FractionalSolution sol;
  sol.x.assign(r.values.begin(), r.values.begin() + g.vertex_count());
  sol.y.assign(r.values.begin() + g.vertex_count(), r.values.end());
  sol.objective = r.objective;

  for (const LinearRow& row : lp.rows) {
    double lhs = 0.0;
    for (auto [var, coef] : row.terms) lhs += coef * r.values[var];
    const bool ok = row.sense == RowSense::greater_equal ? lhs >= row.rhs - kLpFeasibilityTolerance
                    : row.sense == RowSense::less_equal  ? lhs <= row.rhs + kLpFeasibilityTolerance
                                                         : std::abs(lhs - row.rhs) <= kLpFeasibilityTolerance;
    if (!ok) throw SolverError("LP backend returned a point that violates a row");
  }
  return sol;
}

FractionalSolution solve_base_lp(const LpModel& model) {
  DenseSimplex simplex;
  return solve_base_lp(model, simplex);
}

double subset_value(const Graph& graph, const FractionalSolution& sol,
                    std::span<const VertexId> vertices) {
  double value = 0.0;
  for (VertexId v : vertices) value += sol.x[v];
  for (EdgeId e : induced_edges(graph, vertices)) value -= sol.y[e];
  return value;
}

SubsetMinimizer minimize_subset_through(const Graph& graph, const FractionalSolution& sol,
                                        EdgeId anchor) {
  const int n = graph.vertex_count();
  const Edge& st = graph.edge(anchor);

  // Node layout: vertices 0..n-1, positive-y edge nodes, then source and sink.
  std::vector<EdgeId> edge_nodes;
  double total = 1.0;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (sol.y[e] > 0.0) {
      edge_nodes.push_back(e);
      total += sol.y[e];
    }
  }
  for (double xv : sol.x) total += xv;
  const double inf = 2.0 * total;

  const int source = n + static_cast<int>(edge_nodes.size());
  const int sink = source + 1;
  FlowNetwork net(sink + 1);
  for (std::size_t k = 0; k < edge_nodes.size(); ++k) {
    const int node = n + static_cast<int>(k);
    const Edge& e = graph.edge(edge_nodes[k]);
    net.add_arc(source, node, sol.y[edge_nodes[k]]);
    net.add_arc(node, e.u, inf);
    net.add_arc(node, e.v, inf);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (sol.x[v] > 0.0) net.add_arc(v, sink, sol.x[v]);
  }
  net.add_arc(source, st.u, inf);
  net.add_arc(source, st.v, inf);

  const MaxFlowResult flow = net.solve(source, sink);
  SubsetMinimizer out;
  out.anchor = anchor;
  for (VertexId v = 0; v < n; ++v) {
    if (flow.source_side[v] || v == st.u || v == st.v) out.vertices.push_back(v);
  }
  out.value = subset_value(graph, sol, out.vertices);
  return out;
}

std::vector<SubsetMinimizer> separation_sweep(const Graph& graph, const FractionalSolution& sol) {
  std::vector<SubsetMinimizer> out;
  out.reserve(static_cast<std::size_t>(graph.edge_count()));
  for (EdgeId e = 0; e < graph.edge_count(); ++e) out.push_back(minimize_subset_through(graph, sol, e));
  return out;
}

std::optional<SubsetMinimizer> minimum_subset(const Graph& graph, const FractionalSolution& sol) {
  std::optional<SubsetMinimizer> best;
  for (SubsetMinimizer& m : separation_sweep(graph, sol)) {
    if (!best || m.value < best->value - 1e-12) best = std::move(m);
  }
  return best;
}

std::optional<SubsetMinimizer> separation_oracle(const Graph& graph, const FractionalSolution& sol,
                                                 double tol) {
  auto best = minimum_subset(graph, sol);
  if (best && best->value < 1.0 - tol) return best;
  return std::nullopt;
}

CuttingPlaneResult cutting_plane_solve(const Graph& graph, const CuttingPlaneOptions& options,
                                       LpBackend& backend) {
  if (graph.mode() != WeightMode::fc_normalized) {
    throw InstanceError("cutting_plane_solve needs an FC-normalized graph");
  }
  const int n = graph.vertex_count();
  const int cap = options.max_iterations > 0 ? options.max_iterations : std::max(10, 10 * n * n);

  LpModel model(graph);
  CuttingPlaneResult result;
  while (true) {
    if (++result.iterations > cap) {
      std::ostringstream msg;
      msg << "cutting plane: iteration cap " << cap << " reached with "
          << model.cuts().size() << " cuts pooled";
      throw SolverError(msg.str());
    }
    result.solution = solve_base_lp(model, backend);

    std::vector<SubsetMinimizer> violated;
    for (SubsetMinimizer& m : separation_sweep(graph, result.solution)) {
      if (m.value < 1.0 - options.violation_tolerance) violated.push_back(std::move(m));
    }
    if (violated.empty()) break;
    if (!options.add_all_violated) {
      auto best = std::min_element(violated.begin(), violated.end(),
                                   [](const auto& a, const auto& b) { return a.value < b.value - 1e-12; });
      violated = {std::move(*best)};
    }
    int added = 0;
    for (SubsetMinimizer& m : violated) {
      SubsetCut cut{std::move(m.vertices)};
      if (model.contains_cut(cut)) continue;
      model.add_cut(std::move(cut));
      ++added;
    }
    if (added == 0) {
      throw SolverError("cutting plane: separated sets are already pooled (numerical stall)");
    }
  }
  result.cuts.assign(model.cuts().begin(), model.cuts().end());
  return result;
}

CuttingPlaneResult cutting_plane_solve(const Graph& graph, const CuttingPlaneOptions& options) {
  DenseSimplex simplex;
  return cutting_plane_solve(graph, options, simplex);
}

std::string format_cut_report(const Graph& graph, const CuttingPlaneResult& result) {
  std::ostringstream out;
  out.precision(10);
  out << "c cutting plane: " << result.iterations << " iterations, " << result.cuts.size()
      << " cuts, objective " << result.solution.objective << '\n';
  for (const SubsetCut& cut : result.cuts) {
    out << "S = {";
    for (std::size_t i = 0; i < cut.vertices.size(); ++i) {
      out << (i ? "," : "") << cut.vertices[i] + 1;
    }
    out << "}: " << subset_value(graph, result.solution, cut.vertices) << '\n';
  }
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    out << "x " << v + 1 << ' ' << result.solution.x[v] << '\n';
  }
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    out << "y " << e + 1 << ' ' << result.solution.y[e] << '\n';
  }
  return out.str();
}

}  // namespace forestcover
