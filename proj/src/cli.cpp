#include "forestcover/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "forestcover/bfc.hpp"
#include "forestcover/errors.hpp"
#include "forestcover/exact.hpp"
#include "forestcover/fc_algorithms.hpp"
#include "forestcover/generators.hpp"
#include "forestcover/instance_io.hpp"
#include "forestcover/report.hpp"
#include "forestcover/rng.hpp"

namespace forestcover {

using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string out;
  std::string solution_out;
  std::string solution;
  std::uint64_t seed = 1;
  double epsilon = 0.5;
  std::optional<double> lambda;
  std::optional<int> max_experiments;
  double tol = 1e-7;
  bool fixed_point_pruning = false;
  bool dump_cuts = false;

  std::string kind = "gnp-uniform";
  int n = 6;
  double p = 0.5;
  double bias = 0.5;
  double max_weight = 1.0;
  double weight = 1.0;
  int trials = 10;
  std::string method;
};

class Clock {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out.empty()) out << text;
  else write_text_file(opt.out, text);
}

Graph load_input(const Options& opt) {
  if (opt.input.empty()) throw InstanceError("--input is required");
  return read_instance_file(opt.input);
}

void require_fc(const Graph& g) {
  if (g.mode() != WeightMode::fc_normalized) throw InstanceError("this command needs a 'p fc' instance");
}

double require_lambda(const Options& opt) {
  if (!opt.lambda) throw CLI::RequiredError("--lambda");
  return *opt.lambda;
}

RoundingOptions rounding_options(const Options& opt, CuttingPlaneResult* trace) {
  RoundingOptions r;
  r.fixed_point_pruning = opt.fixed_point_pruning;
  r.lp.violation_tolerance = opt.tol;
  r.lp_trace = trace;
  return r;
}

void write_solution(const Options& opt, SolutionKind kind, const std::vector<Tree>& trees) {
  if (opt.solution_out.empty()) return;
  write_text_file(opt.solution_out, emit_solution(SolutionFile{kind, trees}));
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

void summary(std::ostream& err, const RunReport& r) {
  err << r.command << ": " << r.objective_kind << "=" << fmt(r.objective);
  if (r.lower_bound) err << " lower_bound=" << fmt(*r.lower_bound);
  if (const auto ratio = ratio_vs_bound(r.objective, r.lower_bound)) err << " ratio=" << fmt(*ratio);
  err << " trees=" << r.trees.size() << " (n=" << r.instance.n << " m=" << r.instance.m << ")";
  if (r.seed) err << " seed=" << *r.seed;
  if (r.cap_hit && *r.cap_hit) err << " [experiment cap hit: heuristic run]";
  err << '\n';
}

int finish(const Options& opt, const Graph& g, RunReport& r, const Clock& clock, std::ostream& out,
           std::ostream& err) {
  r.total_ms = clock.ms();
  emit(opt, to_json(g, r).dump(2) + "\n", out);
  summary(err, r);
  return kExitOk;
}

void fill_fc(RunReport& r, const FcResult& res) {
  r.method = res.method;
  r.objective = res.wi;
  r.lower_bound = res.lower_bound;
  r.trees = res.forest.trees;
}

int cmd_exact(const Options& opt, std::ostream& out, std::ostream& err) {
  const Clock clock;
  const Graph g = load_input(opt);
  RunReport r;
  r.command = "exact";
  r.method = "exact";
  r.instance = describe_instance(g, opt.input);
  if (g.mode() == WeightMode::bfc_raw || opt.lambda) {
    const double lambda = require_lambda(opt);
    const ExactBfcResult res = exact_bfc(g, lambda);
    r.objective_kind = "count";
    r.objective = res.count;
    r.lower_bound = res.count;
    r.lambda = lambda;
    r.trees = res.trees;
    write_solution(opt, SolutionKind::bfc, res.trees);
  } else {
    const ExactFcResult res = exact_fc(g);
    r.objective = res.wi;
    r.lower_bound = res.wi;
    r.trees = res.forest.trees;
    write_solution(opt, SolutionKind::fc, res.forest.trees);
  }
  return finish(opt, g, r, clock, out, err);
}

int cmd_binary(const Options& opt, std::ostream& out, std::ostream& err) {
  const Clock clock;
  const Graph g = load_input(opt);
  require_fc(g);
  const BinaryOutcome res = forest_cover_binary(g);
  RunReport r;
  r.command = "binary";
  r.instance = describe_instance(g, opt.input);
  fill_fc(r, res.result);
  r.components = res.result.diagnostics.components;
  r.matching_size = res.result.diagnostics.matching_size;
  write_solution(opt, SolutionKind::fc, r.trees);
  return finish(opt, g, r, clock, out, err);
}

int cmd_random(const Options& opt, std::ostream& out, std::ostream& err) {
  const Clock clock;
  const Graph g = load_input(opt);
  require_fc(g);
  RandomizedOptions ro;
  ro.epsilon = opt.epsilon;
  ro.seed = opt.seed;
  ro.max_experiments = opt.max_experiments;
  const FcResult res = randomized_fc(g, ro);
  RunReport r;
  r.command = "random";
  r.instance = describe_instance(g, opt.input);
  fill_fc(r, res);
  r.seed = opt.seed;
  r.epsilon = opt.epsilon;
  r.experiments_full = res.diagnostics.experiments_full;
  r.experiments_run = res.diagnostics.experiments_run;
  r.cap_hit = res.diagnostics.cap_hit;
  r.mean_dual_bound = res.diagnostics.mean_dual_bound;
  r.selected_experiment = res.diagnostics.selected_experiment;
  write_solution(opt, SolutionKind::fc, r.trees);
  return finish(opt, g, r, clock, out, err);
}

int cmd_round(const Options& opt, std::ostream& out, std::ostream& err) {
  const Clock clock;
  const Graph g = load_input(opt);
  require_fc(g);
  CuttingPlaneResult trace;
  const FcResult res = lp_rounding_fc(g, rounding_options(opt, &trace));
  if (opt.dump_cuts) err << format_cut_report(g, trace);
  RunReport r;
  r.command = "round";
  r.instance = describe_instance(g, opt.input);
  fill_fc(r, res);
  r.lp_iterations = res.diagnostics.lp_iterations;
  r.lp_cuts = res.diagnostics.lp_cuts;
  r.lp_objective = res.diagnostics.lp_objective;
  write_solution(opt, SolutionKind::fc, r.trees);
  return finish(opt, g, r, clock, out, err);
}

int cmd_bfc(const Options& opt, std::ostream& out, std::ostream& err) {
  const Clock clock;
  const double lambda = require_lambda(opt);
  const Graph g = load_input(opt);
  CuttingPlaneResult trace;
  const BfcSolution res = bfc_6approx(g, lambda, rounding_options(opt, &trace));
  if (opt.dump_cuts) err << format_cut_report(transform_weights(g, lambda), trace);
  RunReport r;
  r.command = "bfc";
  r.method = "bfc";
  r.instance = describe_instance(g, opt.input);
  r.objective_kind = "count";
  r.objective = res.count();
  r.lambda = lambda;
  r.trees = res.trees;
  r.lp_iterations = res.fc_diagnostics.lp_iterations;
  r.lp_cuts = res.fc_diagnostics.lp_cuts;
  r.lp_objective = res.transformed_lp_objective;
  r.transformed_wi = res.transformed_wi;
  r.transformed_wi_after_split = res.transformed_wi_after_split;
  r.removed_heavy_edges = res.removed_heavy_edges;
  write_solution(opt, SolutionKind::bfc, r.trees);
  return finish(opt, g, r, clock, out, err);
}

GeneratorParams generator_params(const Options& opt, std::uint64_t seed) {
  GeneratorParams gp;
  gp.n = opt.n;
  gp.p = opt.p;
  gp.bias = opt.bias;
  gp.max_weight = opt.max_weight;
  gp.weight = opt.weight;
  gp.seed = seed;
  return gp;
}

int cmd_gen(const Options& opt, std::ostream& out, std::ostream& err) {
  const GeneratorKind kind = parse_generator_kind(opt.kind);
  Graph g;
  if (kind == GeneratorKind::from_vc && !opt.input.empty()) g = from_vertex_cover(load_input(opt));
  else g = generate(kind, generator_params(opt, opt.seed));
  std::ostringstream comment;
  comment << "generated kind=" << opt.kind << " n=" << opt.n << " p=" << format_real(opt.p)
          << " seed=" << opt.seed;
  emit(opt, emit_instance(g, {comment.str()}), out);
  err << "gen: " << opt.kind << " n=" << g.vertex_count() << " m=" << g.edge_count() << " seed=" << opt.seed
      << '\n';
  return kExitOk;
}

std::string default_method(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::gnp_binary:
    case GeneratorKind::from_vc: return "binary";
    case GeneratorKind::gnp_bfc: return "bfc";
    default: return "round";
  }
}

struct TrialRow {
  int trial = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int m = 0;
  double value = 0.0;
  std::optional<double> reference;
  std::optional<double> ratio;
};

int cmd_bench(const Options& opt, std::ostream& out, std::ostream& err) {
  const Clock clock;
  const GeneratorKind kind = parse_generator_kind(opt.kind);
  const std::string method = opt.method.empty() ? default_method(kind) : opt.method;
  static const std::vector<std::string> methods{"exact", "binary", "random", "round", "bfc"};
  if (std::find(methods.begin(), methods.end(), method) == methods.end()) {
    throw CLI::ValidationError("--method", "unknown method '" + method + "'");
  }
  if (opt.trials < 0) throw CLI::ValidationError("--trials", "must be non-negative");
  const bool bfc_problem = method == "bfc" || (method == "exact" && opt.lambda);
  const double budget = opt.lambda.value_or(opt.max_weight);

  const bool exact_reference = bfc_problem ? opt.n <= ExactBudget::bfc().max_n : opt.n <= ExactBudget::fc().max_n;
  std::vector<TrialRow> rows;
  for (int trial = 0; trial < opt.trials; ++trial) {
    TrialRow row;
    row.trial = trial;
    row.seed = derive_seed(opt.seed, static_cast<std::uint64_t>(trial));
    const Graph g = generate(kind, generator_params(opt, row.seed));
    row.n = g.vertex_count();
    row.m = g.edge_count();
    std::optional<double> bound;
    if (method == "exact") {
      row.value = bfc_problem ? exact_bfc(g, budget).count : exact_fc(g).wi;
      bound = row.value;
    } else if (method == "binary") {
      const BinaryOutcome res = forest_cover_binary(g);
      row.value = res.result.wi;
      bound = res.result.lower_bound;
    } else if (method == "random") {
      RandomizedOptions ro;
      ro.epsilon = opt.epsilon;
      ro.seed = derive_seed(row.seed, 1);
      ro.max_experiments = opt.max_experiments;
      row.value = randomized_fc(g, ro).wi;
    } else if (method == "round") {
      const FcResult res = lp_rounding_fc(g, rounding_options(opt, nullptr));
      row.value = res.wi;
      bound = res.lower_bound;
    } else {
      row.value = bfc_6approx(g, budget, rounding_options(opt, nullptr)).count();
    }
    if (exact_reference && method != "exact") {
      row.reference = bfc_problem ? static_cast<double>(exact_bfc(g, budget).count) : exact_fc(g).wi;
    } else {
      row.reference = bound;
    }
    row.ratio = ratio_vs_bound(row.value, row.reference);
    rows.push_back(row);
  }

  json jrows = json::array();
  std::optional<double> max_ratio;
  std::optional<int> worst;
  double ratio_sum = 0.0;
  int ratio_count = 0;
  for (const TrialRow& row : rows) {
    jrows.push_back({{"trial", row.trial},
                     {"seed", row.seed},
                     {"n", row.n},
                     {"m", row.m},
                     {"value", row.value},
                     {"reference", row.reference ? json(*row.reference) : json(nullptr)},
                     {"ratio", row.ratio ? json(*row.ratio) : json(nullptr)}});
    if (row.ratio) {
      ratio_sum += *row.ratio;
      ++ratio_count;
      if (!max_ratio || *row.ratio > *max_ratio) {
        max_ratio = row.ratio;
        worst = row.trial;
      }
    }
  }
  json doc;
  doc["schema"] = kBenchSchema;
  doc["command"] = "bench";
  doc["method"] = method;
  doc["generator"] = {{"kind", opt.kind}, {"n", opt.n}, {"p", opt.p}, {"bias", opt.bias}, {"max_weight", opt.max_weight}};
  doc["seed"] = opt.seed;
  doc["trials"] = opt.trials;
  doc["lambda"] = bfc_problem ? json(budget) : json(nullptr);
  doc["epsilon"] = method == "random" ? json(opt.epsilon) : json(nullptr);
  doc["reference"] = exact_reference && method != "exact" ? "exact" : (method == "exact" ? "self" : "lower_bound");
  doc["rows"] = std::move(jrows);
  doc["summary"] = {{"max_ratio", max_ratio ? json(*max_ratio) : json(nullptr)},
                    {"mean_ratio", ratio_count ? json(ratio_sum / ratio_count) : json(nullptr)},
                    {"worst_trial", worst ? json(*worst) : json(nullptr)}};
  doc["timings"] = {{"total_ms", clock.ms()}};
  emit(opt, doc.dump(2) + "\n", out);

  err << "trial  seed                  n    m    value        reference    ratio\n";
  for (const TrialRow& row : rows) {
    err << std::left << std::setw(7) << row.trial << std::setw(22) << row.seed << std::setw(5) << row.n
        << std::setw(5) << row.m << std::setw(13) << fmt(row.value) << std::setw(13)
        << (row.reference ? fmt(*row.reference) : "-") << (row.ratio ? fmt(*row.ratio) : "-") << '\n';
  }
  err << "bench: method=" << method << " trials=" << opt.trials
      << " max_ratio=" << (max_ratio ? fmt(*max_ratio) : "-") << '\n';
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const Graph g = load_input(opt);
  if (opt.solution.empty()) throw CLI::RequiredError("--solution");
  const SolutionFile sol = read_solution_file(opt.solution);
  const bool bfc = sol.kind == SolutionKind::bfc;
  const double budget = bfc ? require_lambda(opt) : 0.0;

  std::string message = "ok";
  bool trees_valid = true;
  for (const Tree& t : sol.trees) {
    try {
      validate_tree(g, t);
    } catch (const InvalidForest& e) {
      trees_valid = false;
      message = e.what();
      break;
    }
  }
  std::optional<bool> disjoint;
  std::optional<bool> weight_ok;
  bool cover = false;
  std::optional<double> value;
  if (trees_valid) {
    std::vector<bool> covered(static_cast<std::size_t>(g.vertex_count()), false);
    for (const Tree& t : sol.trees) {
      for (VertexId v : t.vertices) covered[v] = true;
    }
    cover = is_vertex_cover(g, covered);
    if (!cover) message = "trees do not cover every edge";
    if (bfc) {
      weight_ok = true;
      for (const Tree& t : sol.trees) {
        if (tree_weight(g, t) > budget + kGraphTolerance) {
          weight_ok = false;
          if (cover) message = "a tree exceeds lambda";
        }
      }
      value = static_cast<double>(sol.trees.size());
    } else {
      disjoint = true;
      try {
        validate_forest(g, Forest{sol.trees});
        value = weighted_index(g, Forest{sol.trees});
      } catch (const InvalidForest& e) {
        disjoint = false;
        if (cover) message = e.what();
      }
    }
  }
  const bool accepted = trees_valid && cover && disjoint.value_or(true) && weight_ok.value_or(true);
  auto ob = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  const InstanceInfo info = describe_instance(g, opt.input);
  json doc;
  doc["schema"] = kVerifySchema;
  doc["command"] = "verify";
  doc["instance"] = {{"source", info.source}, {"kind", info.kind}, {"n", info.n}, {"m", info.m}};
  doc["solution_kind"] = bfc ? "bfc" : "fc";
  doc["lambda"] = bfc ? json(budget) : json(nullptr);
  doc["accepted"] = accepted;
  doc["checks"] = {{"trees_valid", trees_valid}, {"vertex_disjoint", ob(disjoint)}, {"cover", cover},
                   {"weight_bound", ob(weight_ok)}};
  doc["objective"] = {{"kind", bfc ? "count" : "wi"}, {"value", value ? json(*value) : json(nullptr)}};
  doc["message"] = message;
  emit(opt, doc.dump(2) + "\n", out);
  err << "verify: " << (accepted ? "accepted" : "rejected: " + message);
  if (accepted && value) err << " " << (bfc ? "count" : "wi") << "=" << fmt(*value);
  err << '\n';
  return accepted ? kExitOk : kExitRejected;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Forest cover and bounded forest cover solvers", "fcsolve"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) { sub->add_option("--input,-i", opt.input, "instance file"); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out,-o", opt.out, "write the report here instead of stdout"); };
  auto add_solution_out = [&](CLI::App* sub) {
    sub->add_option("--solution-out", opt.solution_out, "also write the solution file");
  };
  auto add_lp = [&](CLI::App* sub) {
    sub->add_option("--tol", opt.tol, "cut violation tolerance")->check(CLI::PositiveNumber);
    sub->add_flag("--fixed-point-pruning", opt.fixed_point_pruning, "repeat pendant pruning to a fixed point");
    sub->add_flag("--dump-cuts", opt.dump_cuts, "print the pooled cuts and final LP point to stderr");
  };
  auto add_lambda = [&](CLI::App* sub) { sub->add_option("--lambda", opt.lambda, "tree weight budget"); };
  auto add_random = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--epsilon", opt.epsilon, "approximation slack in (0,1]");
    sub->add_option("--max-experiments", opt.max_experiments, "experiment cap");
  };
  auto add_gen = [&](CLI::App* sub) {
    sub->add_option("--kind", opt.kind, "gnp-uniform, gnp-binary, gnp-bfc, from-vc, path, star, cycle");
    sub->add_option("--n", opt.n, "vertex count");
    sub->add_option("--p", opt.p, "edge probability");
    sub->add_option("--bias", opt.bias, "gnp-binary: probability of weight 1");
    sub->add_option("--max-weight", opt.max_weight, "gnp-bfc: largest weight");
    sub->add_option("--weight", opt.weight, "path/star/cycle: edge weight");
  };

  CLI::App* exact = app.add_subcommand("exact", "exact optimum by enumeration (small instances)");
  add_input(exact), add_out(exact), add_solution_out(exact), add_lambda(exact);
  CLI::App* binary = app.add_subcommand("binary", "2-approximation for 0/1 weights");
  add_input(binary), add_out(binary), add_solution_out(binary);
  CLI::App* random = app.add_subcommand("random", "(2+epsilon) randomized approximation");
  add_input(random), add_out(random), add_solution_out(random), add_random(random);
  CLI::App* round = app.add_subcommand("round", "LP rounding 2-approximation");
  add_input(round), add_out(round), add_solution_out(round), add_lp(round);
  CLI::App* bfc = app.add_subcommand("bfc", "bounded forest cover 6-approximation");
  add_input(bfc), add_out(bfc), add_solution_out(bfc), add_lp(bfc), add_lambda(bfc);
  CLI::App* gen = app.add_subcommand("gen", "generate an instance");
  add_input(gen), add_out(gen), add_gen(gen);
  gen->add_option("--seed", opt.seed, "random seed");
  CLI::App* bench = app.add_subcommand("bench", "sweep generated instances and tabulate ratios");
  add_out(bench), add_gen(bench), add_random(bench), add_lambda(bench);
  bench->add_option("--tol", opt.tol, "cut violation tolerance")->check(CLI::PositiveNumber);
  bench->add_flag("--fixed-point-pruning", opt.fixed_point_pruning, "repeat pendant pruning to a fixed point");
  bench->add_option("--trials", opt.trials, "number of instances");
  bench->add_option("--method", opt.method, "exact, binary, random, round, bfc");
  CLI::App* verify = app.add_subcommand("verify", "re-check a stored solution against its instance");
  add_input(verify), add_out(verify), add_lambda(verify);
  verify->add_option("--solution", opt.solution, "solution file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (exact->parsed()) return cmd_exact(opt, out, err);
    if (binary->parsed()) return cmd_binary(opt, out, err);
    if (random->parsed()) return cmd_random(opt, out, err);
    if (round->parsed()) return cmd_round(opt, out, err);
    if (bfc->parsed()) return cmd_bfc(opt, out, err);
    if (gen->parsed()) return cmd_gen(opt, out, err);
    if (bench->parsed()) return cmd_bench(opt, out, err);
    if (verify->parsed()) return cmd_verify(opt, out, err);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InstanceError& e) {
    err << "instance error: " << e.what() << '\n';
    return kExitInstance;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitSolver;
  }
  return kExitUsage;
}

}  // namespace forestcover
