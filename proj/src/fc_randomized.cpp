#include <algorithm>
#include <chrono>
#include <cmath>

#include "forestcover/errors.hpp"
#include "forestcover/fc_algorithms.hpp"
#include "forestcover/rng.hpp"

namespace forestcover {

int full_experiment_count(int edge_count, double epsilon) {
  const double delta = epsilon * epsilon;
  const double m = std::ceil(static_cast<double>(edge_count) / (2.0 * delta * delta));
  if (!(m < 2e9)) return 2000000000;
  return std::max(1, static_cast<int>(m));
}

ExperimentOutcome run_experiment(const Graph& graph, std::uint64_t seed, int index) {
  ExperimentOutcome out;
  out.seed = seed;
  out.index = index;
  const int m = graph.edge_count();
  out.indicator.resize(static_cast<std::size_t>(m));
  std::vector<double> binary(static_cast<std::size_t>(m));
  for (EdgeId e = 0; e < m; ++e) {
    const double u = to_unit(derive_u64(seed, static_cast<std::uint64_t>(index), static_cast<std::uint64_t>(e)));
    out.indicator[e] = u < 1.0 - graph.weight(e) ? 1 : 0;
    binary[e] = 1.0 - out.indicator[e];
  }
  const Graph experiment = graph.with_weights(binary, WeightMode::fc_normalized);
  BinaryOutcome b = forest_cover_binary(experiment);
  out.forest = std::move(b.result.forest);
  out.experiment_objective = b.result.wi;
  out.dual_bound = b.certificate.bound();
  out.true_wi = weighted_index(graph, out.forest);
  return out;
}

FcResult randomized_fc(const Graph& graph, const RandomizedOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (!(options.epsilon > 0.0 && options.epsilon <= 1.0)) {
    throw InstanceError("randomized_fc: epsilon must lie in (0, 1]");
  }
  if (graph.mode() != WeightMode::fc_normalized) {
    throw InstanceError("randomized_fc needs an FC-normalized graph");
  }
  const int cap = options.max_experiments.value_or(kDefaultExperimentCap);
  if (cap < 1) throw InstanceError("randomized_fc: max_experiments must be positive");

  FcResult result;
  result.method = "random";
  FcDiagnostics& diag = result.diagnostics;
  diag.experiments_full = full_experiment_count(graph.edge_count(), options.epsilon);
  diag.experiments_run = std::min(diag.experiments_full, cap);
  diag.cap_hit = diag.experiments_run < diag.experiments_full;

  double dual_sum = 0.0;
  bool have = false;
  for (int i = 0; i < diag.experiments_run; ++i) {
    ExperimentOutcome exp = run_experiment(graph, options.seed, i);
    dual_sum += exp.dual_bound;
    if (!have || exp.true_wi < result.wi - 1e-12) {
      have = true;
      result.wi = exp.true_wi;
      result.forest = std::move(exp.forest);
      diag.selected_experiment = i;
      diag.selected_experiment_objective = exp.experiment_objective;
    }
  }
  diag.mean_dual_bound = dual_sum / diag.experiments_run;
  diag.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace forestcover
