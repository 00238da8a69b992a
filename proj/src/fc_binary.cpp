#include <algorithm>
#include <chrono>
#include <cmath>

#include "forestcover/errors.hpp"
#include "forestcover/fc_algorithms.hpp"
#include "forestcover/matching.hpp"

namespace forestcover {

double DualCertificate::bound() const {
  double total = 0.0;
  for (double z : z_edge) total += z;
  for (const auto& [set, z] : z_sets) total += z;
  return total;
}

bool check_dual_feasibility(const Graph& graph, const DualCertificate& cert) {
  constexpr double tol = kGraphTolerance;
  const int n = graph.vertex_count();
  const int m = graph.edge_count();
  if (!cert.z_edge.empty() && static_cast<int>(cert.z_edge.size()) != m) return false;

  std::vector<double> vertex_load(static_cast<std::size_t>(n), 0.0);
  std::vector<double> edge_cover(static_cast<std::size_t>(m), 0.0);

  for (EdgeId e = 0; e < static_cast<int>(cert.z_edge.size()); ++e) {
    const double z = cert.z_edge[e];
    if (z < -tol) return false;
    vertex_load[graph.edge(e).u] += z;
    vertex_load[graph.edge(e).v] += z;
  }
  for (const auto& [key, z] : cert.z_vertex_edge) {
    const auto [u, e] = key;
    if (z < -tol || e < 0 || e >= m || u < 0 || u >= n) return false;
    if (graph.edge(e).u != u && graph.edge(e).v != u) return false;
    vertex_load[u] += z;
    edge_cover[e] += z;
  }
  for (const auto& [set, z] : cert.z_sets) {
    if (z < -tol) return false;
    for (VertexId v : set) {
      if (v < 0 || v >= n) return false;
    }
    const std::vector<EdgeId> inside = induced_edges(graph, set);
    if (inside.empty() && z > tol) return false;
    for (VertexId v : set) vertex_load[v] += z;
    for (EdgeId e : inside) edge_cover[e] += z;
  }
  for (double load : vertex_load) {
    if (load > 1.0 + tol) return false;
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (edge_cover[e] < 1.0 - graph.weight(e) - tol) return false;
  }
  return true;
}

BinaryOutcome forest_cover_binary(const Graph& graph) {
  const auto start = std::chrono::steady_clock::now();
  const int n = graph.vertex_count();
  const int m = graph.edge_count();

  std::vector<bool> zero_edge(static_cast<std::size_t>(m), false);
  std::vector<bool> in_v0(static_cast<std::size_t>(n), false);
  for (EdgeId e = 0; e < m; ++e) {
    const double w = graph.weight(e);
    if (std::abs(w) <= kGraphTolerance) {
      zero_edge[e] = true;
      in_v0[graph.edge(e).u] = true;
      in_v0[graph.edge(e).v] = true;
    } else if (std::abs(w - 1.0) > kGraphTolerance) {
      throw InstanceError("forest_cover_binary: edge " + std::to_string(e) + " has non-binary weight");
    }
  }

  BinaryOutcome out;
  FcResult& result = out.result;
  result.method = "binary";

  for (const Component& comp : connected_components(graph, in_v0, zero_edge)) {
    result.forest.trees.push_back(kruskal_mst(graph, comp));
    out.certificate.z_sets.emplace_back(comp.vertices, 1.0);
  }
  const int k = static_cast<int>(result.forest.trees.size());

  std::vector<VertexId> v1;
  for (VertexId v = 0; v < n; ++v) {
    if (!in_v0[v]) v1.push_back(v);
  }
  std::vector<EdgeId> e1;
  for (EdgeId e = 0; e < m; ++e) {
    if (!zero_edge[e] && !in_v0[graph.edge(e).u] && !in_v0[graph.edge(e).v]) e1.push_back(e);
  }
  const Matching matching = maximum_matching(graph, v1, e1);
  for (EdgeId e : matching.edges) {
    const Edge& edge = graph.edge(e);
    result.forest.trees.push_back(Tree{{std::min(edge.u, edge.v), std::max(edge.u, edge.v)}, {e}});
    out.certificate.z_sets.emplace_back(result.forest.trees.back().vertices, 1.0);
  }
  std::sort(result.forest.trees.begin(), result.forest.trees.end(),
            [](const Tree& a, const Tree& b) { return a.vertices.front() < b.vertices.front(); });

  result.wi = weighted_index(graph, result.forest);
  const double expected = static_cast<double>(k + 2 * matching.size());
  if (std::abs(result.wi - expected) > kGraphTolerance) {
    throw SolverError("forest_cover_binary: weighted index differs from k + 2|M|");
  }
  result.wi = expected;
  result.lower_bound = static_cast<double>(k + matching.size());
  result.diagnostics.components = k;
  result.diagnostics.matching_size = matching.size();
  result.diagnostics.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace forestcover
