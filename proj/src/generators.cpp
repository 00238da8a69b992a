#include "forestcover/generators.hpp"

#include <cmath>

#include "forestcover/errors.hpp"
#include "forestcover/rng.hpp"

namespace forestcover {

namespace {

constexpr std::uint64_t kPresenceStream = 1;
constexpr std::uint64_t kWeightStream = 2;

std::vector<Edge> gnp_topology(int n, double p, std::uint64_t seed) {
  std::vector<Edge> edges;
  std::uint64_t pair = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++pair) {
      if (to_unit(derive_u64(seed, kPresenceStream, pair)) < p) edges.push_back({u, v, 0.0});
    }
  }
  return edges;
}

double weight_draw(std::uint64_t seed, std::size_t edge_index) {
  return to_unit(derive_u64(seed, kWeightStream, edge_index));
}

void check_unit(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw InstanceError(std::string("generator: ") + name + " must lie in [0,1]");
  }
}

}  // namespace

GeneratorKind parse_generator_kind(const std::string& name) {
  if (name == "gnp-uniform") return GeneratorKind::gnp_uniform;
  if (name == "gnp-binary") return GeneratorKind::gnp_binary;
  if (name == "gnp-bfc") return GeneratorKind::gnp_bfc;
  if (name == "from-vc") return GeneratorKind::from_vc;
  if (name == "path") return GeneratorKind::path;
  if (name == "star") return GeneratorKind::star;
  if (name == "cycle") return GeneratorKind::cycle;
  throw InstanceError("unknown generator kind '" + name + "'");
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::gnp_uniform: return "gnp-uniform";
    case GeneratorKind::gnp_binary: return "gnp-binary";
    case GeneratorKind::gnp_bfc: return "gnp-bfc";
    case GeneratorKind::from_vc: return "from-vc";
    case GeneratorKind::path: return "path";
    case GeneratorKind::star: return "star";
    case GeneratorKind::cycle: return "cycle";
  }
  return "unknown";
}

Graph from_vertex_cover(const Graph& base) {
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  for (Edge& e : edges) e.w = 1.0;
  return Graph(base.vertex_count(), std::move(edges), WeightMode::fc_normalized);
}

Graph generate(GeneratorKind kind, const GeneratorParams& params) {
  const int n = params.n;
  if (n < 0 || n > 100000) throw InstanceError("generator: n out of range");
  check_unit(params.p, "p");

  switch (kind) {
    case GeneratorKind::gnp_uniform: {
      std::vector<Edge> edges = gnp_topology(n, params.p, params.seed);
      for (std::size_t i = 0; i < edges.size(); ++i) edges[i].w = weight_draw(params.seed, i);
      return Graph(n, std::move(edges), WeightMode::fc_normalized);
    }
    case GeneratorKind::gnp_binary: {
      check_unit(params.bias, "bias");
      std::vector<Edge> edges = gnp_topology(n, params.p, params.seed);
      for (std::size_t i = 0; i < edges.size(); ++i) {
        edges[i].w = weight_draw(params.seed, i) < params.bias ? 1.0 : 0.0;
      }
      return Graph(n, std::move(edges), WeightMode::fc_normalized);
    }
    case GeneratorKind::gnp_bfc: {
      if (!(params.max_weight > 0.0 && std::isfinite(params.max_weight))) {
        throw InstanceError("generator: max_weight must be positive");
      }
      std::vector<Edge> edges = gnp_topology(n, params.p, params.seed);
      for (std::size_t i = 0; i < edges.size(); ++i) {
        edges[i].w = params.max_weight * (1.0 - weight_draw(params.seed, i));
      }
      return Graph(n, std::move(edges), WeightMode::bfc_raw);
    }
    case GeneratorKind::from_vc:
      return from_vertex_cover(Graph(n, gnp_topology(n, params.p, params.seed)));
    case GeneratorKind::path:
    case GeneratorKind::star:
    case GeneratorKind::cycle: {
      const double w = params.weight;
      if (!(w >= 0.0 && std::isfinite(w))) throw InstanceError("generator: weight must be finite and non-negative");
      const bool fc = w <= 1.0;
      std::vector<Edge> edges;
      for (int i = 1; i < n; ++i) {
        if (kind == GeneratorKind::star) edges.push_back({0, i, w});
        else edges.push_back({i - 1, i, w});
      }
      if (kind == GeneratorKind::cycle) {
        if (n < 3) throw InstanceError("generator: a cycle needs n >= 3");
        edges.push_back({0, n - 1, w});
      }
      return Graph(n, std::move(edges), fc ? WeightMode::fc_normalized : WeightMode::bfc_raw);
    }
  }
  throw InstanceError("generator: unknown kind");
}

}  // namespace forestcover
