#include "forestcover/report.hpp"

#include <cmath>

namespace forestcover {

using nlohmann::json;

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

// Type tags for the validator. A leading '?' allows null.
const json& report_template() {
  static const json t = {
      {"schema", "string"},
      {"command", "string"},
      {"method", "string"},
      {"instance", {{"source", "string"}, {"kind", "string"}, {"n", "int"}, {"m", "int"}}},
      {"seed", "?int"},
      {"epsilon", "?number"},
      {"objective", {{"kind", "string"}, {"value", "number"}}},
      {"lower_bound", "?number"},
      {"ratio_vs_bound", "?number"},
      {"lambda", "?number"},
      {"solution", json::array({{{"vertices", json::array({"int"})},
                                 {"edges", json::array({"int"})},
                                 {"weight", "number"}}})},
      {"timings", {{"total_ms", "number"}}},
      {"diagnostics",
       {{"experiments_full", "?int"},
        {"experiments_run", "?int"},
        {"cap_hit", "?bool"},
        {"mean_dual_bound", "?number"},
        {"selected_experiment", "?int"},
        {"lp_iterations", "?int"},
        {"lp_cuts", "?int"},
        {"lp_objective", "?number"},
        {"components", "?int"},
        {"matching_size", "?int"},
        {"transformed_wi", "?number"},
        {"transformed_wi_after_split", "?number"},
        {"removed_heavy_edges", "?int"}}},
  };
  return t;
}

const json& bench_template() {
  static const json t = {
      {"schema", "string"},
      {"command", "string"},
      {"method", "string"},
      {"generator", {{"kind", "string"}, {"n", "int"}, {"p", "number"}, {"bias", "number"}, {"max_weight", "number"}}},
      {"seed", "int"},
      {"trials", "int"},
      {"lambda", "?number"},
      {"epsilon", "?number"},
      {"reference", "string"},
      {"rows", json::array({{{"trial", "int"},
                             {"seed", "int"},
                             {"n", "int"},
                             {"m", "int"},
                             {"value", "number"},
                             {"reference", "?number"},
                             {"ratio", "?number"}}})},
      {"summary", {{"max_ratio", "?number"}, {"mean_ratio", "?number"}, {"worst_trial", "?int"}}},
      {"timings", {{"total_ms", "number"}}},
  };
  return t;
}

const json& verify_template() {
  static const json t = {
      {"schema", "string"},
      {"command", "string"},
      {"instance", {{"source", "string"}, {"kind", "string"}, {"n", "int"}, {"m", "int"}}},
      {"solution_kind", "string"},
      {"lambda", "?number"},
      {"accepted", "bool"},
      {"checks", {{"trees_valid", "bool"}, {"vertex_disjoint", "?bool"}, {"cover", "bool"}, {"weight_bound", "?bool"}}},
      {"objective", {{"kind", "string"}, {"value", "?number"}}},
      {"message", "string"},
  };
  return t;
}

void check(const json& doc, const json& tmpl, const std::string& path, std::vector<std::string>& problems) {
  if (tmpl.is_string()) {
    std::string tag = tmpl.get<std::string>();
    const bool nullable = !tag.empty() && tag.front() == '?';
    if (nullable) tag.erase(0, 1);
    if (doc.is_null()) {
      if (!nullable) problems.push_back(path + ": null not allowed");
      return;
    }
    bool ok = false;
    if (tag == "string") ok = doc.is_string();
    else if (tag == "bool") ok = doc.is_boolean();
    else if (tag == "int") ok = doc.is_number_integer();
    else if (tag == "number") ok = doc.is_number() && std::isfinite(doc.get<double>());
    if (!ok) problems.push_back(path + ": expected " + tag);
    return;
  }
  if (tmpl.is_array()) {
    if (!doc.is_array()) {
      problems.push_back(path + ": expected array");
      return;
    }
    for (std::size_t i = 0; i < doc.size(); ++i) check(doc[i], tmpl[0], path + "[" + std::to_string(i) + "]", problems);
    return;
  }
  if (!doc.is_object()) {
    problems.push_back(path + ": expected object");
    return;
  }
  for (const auto& [key, sub] : tmpl.items()) {
    if (!doc.contains(key)) {
      problems.push_back(path + "." + key + ": missing");
      continue;
    }
    check(doc[key], sub, path + "." + key, problems);
  }
  for (const auto& [key, sub] : doc.items()) {
    if (!tmpl.contains(key)) problems.push_back(path + "." + key + ": unexpected key");
  }
}

}  // namespace

InstanceInfo describe_instance(const Graph& graph, const std::string& source) {
  return {source, graph.mode() == WeightMode::bfc_raw ? "bfc" : "fc", graph.vertex_count(), graph.edge_count()};
}

std::optional<double> ratio_vs_bound(double objective, std::optional<double> lower_bound) {
  if (!lower_bound) return std::nullopt;
  if (std::abs(*lower_bound) <= 1e-12) {
    if (std::abs(objective) <= 1e-12) return 1.0;
    return std::nullopt;
  }
  return objective / *lower_bound;
}

json to_json(const Graph& graph, const RunReport& r) {
  json solution = json::array();
  for (const Tree& t : r.trees) {
    json vs = json::array();
    json es = json::array();
    for (VertexId v : t.vertices) vs.push_back(v + 1);
    for (EdgeId e : t.edges) es.push_back(e + 1);
    solution.push_back({{"vertices", vs}, {"edges", es}, {"weight", tree_weight(graph, t)}});
  }
  json doc;
  doc["schema"] = kReportSchema;
  doc["command"] = r.command;
  doc["method"] = r.method;
  doc["instance"] = {{"source", r.instance.source}, {"kind", r.instance.kind}, {"n", r.instance.n}, {"m", r.instance.m}};
  doc["seed"] = opt(r.seed);
  doc["epsilon"] = opt(r.epsilon);
  doc["objective"] = {{"kind", r.objective_kind}, {"value", r.objective}};
  doc["lower_bound"] = opt(r.lower_bound);
  doc["ratio_vs_bound"] = opt(ratio_vs_bound(r.objective, r.lower_bound));
  doc["lambda"] = opt(r.lambda);
  doc["solution"] = std::move(solution);
  doc["timings"] = {{"total_ms", r.total_ms}};
  doc["diagnostics"] = {
      {"experiments_full", opt(r.experiments_full)},
      {"experiments_run", opt(r.experiments_run)},
      {"cap_hit", opt(r.cap_hit)},
      {"mean_dual_bound", opt(r.mean_dual_bound)},
      {"selected_experiment", opt(r.selected_experiment)},
      {"lp_iterations", opt(r.lp_iterations)},
      {"lp_cuts", opt(r.lp_cuts)},
      {"lp_objective", opt(r.lp_objective)},
      {"components", opt(r.components)},
      {"matching_size", opt(r.matching_size)},
      {"transformed_wi", opt(r.transformed_wi)},
      {"transformed_wi_after_split", opt(r.transformed_wi_after_split)},
      {"removed_heavy_edges", opt(r.removed_heavy_edges)},
  };
  return doc;
}

std::vector<std::string> validate_report(const json& doc) {
  std::vector<std::string> problems;
  if (!doc.is_object() || !doc.contains("schema") || !doc["schema"].is_string()) {
    problems.push_back("$: missing schema tag");
    return problems;
  }
  const std::string schema = doc["schema"].get<std::string>();
  if (schema == kReportSchema) check(doc, report_template(), "$", problems);
  else if (schema == kBenchSchema) check(doc, bench_template(), "$", problems);
  else if (schema == kVerifySchema) check(doc, verify_template(), "$", problems);
  else problems.push_back("$: unknown schema '" + schema + "'");
  return problems;
}

}  // namespace forestcover
