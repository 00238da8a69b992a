#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forestcover/graph.hpp"

namespace forestcover {

enum class GeneratorKind { gnp_uniform, gnp_binary, gnp_bfc, from_vc, path, star, cycle };

// "gnp-uniform", "gnp-binary", "gnp-bfc", "from-vc", "path", "star", "cycle".
GeneratorKind parse_generator_kind(const std::string& name);
std::string to_string(GeneratorKind kind);

struct GeneratorParams {
  int n = 0;
  double p = 0.5;            // edge probability for the gnp kinds and for from-vc without a base
  double bias = 0.5;         // gnp-binary: probability that a weight is 1
  double max_weight = 1.0;   // gnp-bfc: weights drawn uniformly from (0, max_weight]
  double weight = 1.0;       // path/star/cycle: weight on every edge
  std::uint64_t seed = 1;
};

// Deterministic in (kind, params). Every gnp kind draws each vertex pair
// independently from a counter-based stream keyed by the pair index. Throws
// InstanceError on invalid params.
Graph generate(GeneratorKind kind, const GeneratorParams& params);

// The vertex cover reduction instance: same topology as `base`, all weights 1.
Graph from_vertex_cover(const Graph& base);

}  // namespace forestcover
