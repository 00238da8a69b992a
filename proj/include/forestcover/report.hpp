#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "forestcover/bfc.hpp"
#include "forestcover/fc_algorithms.hpp"
#include "forestcover/graph.hpp"

namespace forestcover {

inline constexpr const char* kReportSchema = "forestcover-report/1";
inline constexpr const char* kBenchSchema = "forestcover-bench/1";
inline constexpr const char* kVerifySchema = "forestcover-verify/1";

struct InstanceInfo {
  std::string source = "-";
  std::string kind = "fc";  // "fc" or "bfc"
  int n = 0;
  int m = 0;
};

InstanceInfo describe_instance(const Graph& graph, const std::string& source);

// Every key below is always present; inapplicable values are null.
struct RunReport {
  std::string command;
  std::string method;
  InstanceInfo instance;
  std::optional<std::uint64_t> seed;
  std::optional<double> epsilon;
  std::string objective_kind = "wi";  // "wi" or "count"
  double objective = 0.0;
  std::optional<double> lower_bound;
  std::optional<double> lambda;
  std::vector<Tree> trees;
  double total_ms = 0.0;

  std::optional<int> experiments_full;
  std::optional<int> experiments_run;
  std::optional<bool> cap_hit;
  std::optional<double> mean_dual_bound;
  std::optional<int> selected_experiment;
  std::optional<int> lp_iterations;
  std::optional<int> lp_cuts;
  std::optional<double> lp_objective;
  std::optional<int> components;
  std::optional<int> matching_size;
  std::optional<double> transformed_wi;
  std::optional<double> transformed_wi_after_split;
  std::optional<int> removed_heavy_edges;
};

// objective / lower_bound; 1 when both are 0, null when only the bound is 0.
std::optional<double> ratio_vs_bound(double objective, std::optional<double> lower_bound);

nlohmann::json to_json(const Graph& graph, const RunReport& report);

// Schema problems (missing or unexpected keys, wrong types, non-finite
// numbers); empty when the document is a valid report of its declared schema.
std::vector<std::string> validate_report(const nlohmann::json& doc);

}  // namespace forestcover
