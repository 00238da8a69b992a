// Acceptance suite: one [PASS]/[FAIL] line per criterion, tolerances and
// runtime limits fixed below. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>

#include <json.hpp>

#include "forestcover/bfc.hpp"
#include "forestcover/cli.hpp"
#include "forestcover/exact.hpp"
#include "forestcover/fc_algorithms.hpp"
#include "forestcover/generators.hpp"
#include "forestcover/instance_io.hpp"
#include "forestcover/lp_relaxation.hpp"
#include "forestcover/rng.hpp"
#include "oracles.hpp"

using namespace forestcover;

namespace {

constexpr double kIndexTolerance = 1e-9;
constexpr double kLpTolerance = 1e-6;
constexpr double kSeparationTolerance = 1e-7;
constexpr double kFormulaTolerance = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> body;
};

std::string num(double v) {
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

std::vector<double> weighting(int m, std::uint64_t mask) {
  std::vector<double> w(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) w[i] = static_cast<double>(mask >> i & 1U);
  return w;
}

std::vector<fctest::SmallGraph> connected_up_to_six() {
  std::vector<fctest::SmallGraph> out;
  for (int n = 1; n <= 5; ++n) {
    for (auto& g : fctest::labeled_graphs(n)) {
      if (g.connected()) out.push_back(std::move(g));
    }
  }
  for (auto& g : fctest::nonisomorphic_graphs(6)) {
    if (g.connected()) out.push_back(std::move(g));
  }
  return out;
}

GeneratorParams random_params(std::uint64_t seed, int max_n) {
  std::mt19937_64 rng(seed);
  GeneratorParams gp;
  gp.n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
  gp.p = 0.25 + 0.5 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  gp.seed = derive_seed(seed, 1);
  return gp;
}

Tree singleton_or_whole(const Graph& g) {
  if (g.edge_count() == 0) return singleton_tree(0);
  std::vector<EdgeId> all(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) all[e] = e;
  return tree_from_edges(g, all);
}

// Criteria 1 and 2 share the instance suite.
struct BinarySuite {
  long instances = 0;
  long exhaustive = 0;
  Outcome approx;
  Outcome duality;
  double seconds = 0.0;
};

BinarySuite& binary_suite() {
  static BinarySuite suite = [] {
    BinarySuite s;
    const auto start = std::chrono::steady_clock::now();
    auto check = [&s](const Graph& g, const std::string& tag) {
      ++s.instances;
      const BinaryOutcome b = forest_cover_binary(g);
      const double opt = exact_fc(g).wi;
      const int k = b.result.diagnostics.components;
      const int m = b.result.diagnostics.matching_size;
      const double bound = b.certificate.bound();
      s.approx.require(is_forest_cover(g, b.result.forest), tag + ": not a forest cover");
      s.approx.require(b.result.wi <= 2.0 * opt + kIndexTolerance, tag + ": wi " + num(b.result.wi) + " > 2 OPT " + num(opt));
      s.approx.require(b.result.wi == static_cast<double>(k + 2 * m), tag + ": wi != k + 2|M|");
      s.approx.require(check_dual_feasibility(g, b.certificate), tag + ": certificate infeasible");
      s.approx.require(std::abs(bound - (k + m)) <= kIndexTolerance, tag + ": bound != k + |M|");
      s.approx.require(bound <= opt + kIndexTolerance, tag + ": bound above OPT");
      s.duality.require(bound <= opt + kIndexTolerance, tag + ": bound " + num(bound) + " > OPT " + num(opt));
    };
    for (const fctest::SmallGraph& sg : connected_up_to_six()) {
      const int m = sg.edge_count();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        check(fctest::to_graph(sg, weighting(m, mask)), "n=" + std::to_string(sg.n) + " mask=" + std::to_string(mask));
        ++s.exhaustive;
      }
    }
    for (int trial = 0; trial < 500; ++trial) {
      GeneratorParams gp = random_params(derive_seed(1001, static_cast<std::uint64_t>(trial)), 8);
      check(generate(GeneratorKind::gnp_binary, gp), "random trial " + std::to_string(trial));
    }
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
  }();
  return suite;
}

Outcome criterion_binary() {
  BinarySuite& s = binary_suite();
  Outcome o = s.approx;
  o.detail = std::to_string(s.exhaustive) + " exhaustive + 500 random instances";
  return o;
}

Outcome criterion_duality() {
  BinarySuite& s = binary_suite();
  Outcome o = s.duality;
  const Graph p3(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  const BinaryOutcome b = forest_cover_binary(p3);
  const double bound = b.certificate.bound();
  o.require(b.result.wi == 2.0 && bound == 1.0, "path-3: wi " + num(b.result.wi) + ", bound " + num(bound));
  o.require(b.result.wi / bound == 2.0, "path-3 ratio is not exactly 2");
  o.require(exact_fc(p3).wi == 1.0, "path-3 OPT is not 1");
  o.detail = std::to_string(s.instances) + " instances, path-3 ratio " + num(b.result.wi / bound);
  return o;
}

Outcome criterion_separation() {
  Outcome o;
  std::mt19937_64 rng(3003);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int points = 0;
  int violated = 0;
  double worst = 0.0;
  while (points < 300) {
    const int n = 2 + static_cast<int>(rng() % 9);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (unit(rng) < 0.5) edges.push_back({u, v, unit(rng)});
      }
    }
    if (edges.empty()) continue;
    const Graph g(n, edges);
    FractionalSolution s;
    if (points % 2 == 0) {
      // Random point, scaled so the minimum lands on both sides of 1.
      const double scale = 0.5 + 2.0 * unit(rng);
      for (int v = 0; v < n; ++v) s.x.push_back(std::min(1.0, rng() % 6 == 0 ? 0.0 : scale * unit(rng)));
      for (const Edge& e : g.edges()) s.y.push_back(rng() % 4 == 0 ? 0.0 : unit(rng) * std::min(s.x[e.u], s.x[e.v]));
    } else {
      // An intermediate cutting-plane iterate after a random number of rounds.
      LpModel model(g);
      const int rounds = static_cast<int>(rng() % 4);
      s = solve_base_lp(model);
      for (int r = 0; r < rounds; ++r) {
        const auto cut = separation_oracle(g, s, kSeparationTolerance);
        if (!cut) break;
        model.add_cut(SubsetCut{cut->vertices});
        s = solve_base_lp(model);
      }
    }
    ++points;
    const auto brute = brute_force_separation(g, s);
    const auto fast = minimum_subset(g, s);
    const auto verdict = separation_oracle(g, s, kSeparationTolerance);
    const bool brute_violated = brute && brute->value < 1.0 - kSeparationTolerance;
    violated += brute_violated ? 1 : 0;
    o.require(brute.has_value() && fast.has_value(), "missing minimum");
    if (!brute || !fast) continue;
    worst = std::max(worst, std::abs(brute->value - fast->value));
    o.require(std::abs(brute->value - fast->value) <= kSeparationTolerance,
              "point " + std::to_string(points) + ": min " + num(fast->value) + " vs " + num(brute->value));
    o.require(verdict.has_value() == brute_violated, "point " + std::to_string(points) + ": verdict differs");
    if (verdict) {
      o.require(std::abs(subset_value(g, s, verdict->vertices) - brute->value) <= kSeparationTolerance,
                "point " + std::to_string(points) + ": returned set is not minimal");
    }
  }
  o.detail = "300 points, " + std::to_string(violated) + " violated, max |diff| " + num(worst);
  return o;
}

Outcome criterion_rounding() {
  Outcome o;
  double worst = 0.0;
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = generate(GeneratorKind::gnp_uniform, random_params(derive_seed(4004, static_cast<std::uint64_t>(trial)), 8));
    const FcResult r = lp_rounding_fc(g);
    const double lp = r.lower_bound.value();
    const double opt = exact_fc(g).wi;
    const std::string tag = "trial " + std::to_string(trial);
    o.require(is_forest_cover(g, r.forest), tag + ": not a forest cover");
    o.require(r.wi <= 2.0 * lp + kLpTolerance, tag + ": wi " + num(r.wi) + " > 2 LP " + num(lp));
    o.require(lp <= opt + kLpTolerance, tag + ": LP " + num(lp) + " > OPT " + num(opt));
    if (lp > 1e-9) worst = std::max(worst, r.wi / lp);
  }
  const Graph tri(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  const FcResult t = lp_rounding_fc(tri);
  o.require(std::abs(t.lower_bound.value() - 1.5) <= kLpTolerance, "triangle LP " + num(t.lower_bound.value()));
  o.require(std::abs(t.wi - 3.0) <= kIndexTolerance, "triangle wi " + num(t.wi));
  o.detail = "300 instances, max wi/LP " + num(worst) + ", triangle wi " + num(t.wi) + " = 2 x " + num(t.lower_bound.value());
  return o;
}

Outcome criterion_randomized() {
  Outcome o;
  constexpr double epsilon = 0.5;
  int within = 0;
  int runs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = generate(GeneratorKind::gnp_uniform, random_params(derive_seed(5005, static_cast<std::uint64_t>(trial)), 8));
    RandomizedOptions opts;
    opts.epsilon = epsilon;
    opts.seed = derive_seed(5006, static_cast<std::uint64_t>(trial));
    opts.max_experiments = full_experiment_count(g.edge_count(), epsilon);
    const FcResult r = randomized_fc(g, opts);
    ++runs;
    o.require(!r.diagnostics.cap_hit, "trial " + std::to_string(trial) + ": cap hit");
    o.require(is_forest_cover(g, r.forest), "trial " + std::to_string(trial) + ": not a forest cover");
    if (r.wi <= (2.0 + epsilon) * exact_fc(g).wi + kIndexTolerance) ++within;
  }
  const double share = static_cast<double>(within) / runs;
  o.require(share >= 0.95, "only " + num(100.0 * share) + "% within (2+eps) OPT");

  // Same seed, same report (timings aside).
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / ("fc_accept_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string input = (dir / "det.fc").string();
  GeneratorParams gp;
  gp.n = 8;
  gp.p = 0.5;
  gp.seed = 77;
  write_text_file(input, emit_instance(generate(GeneratorKind::gnp_uniform, gp)));
  auto report = [&] {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_command({"random", "--input", input, "--seed", "9", "--epsilon", "0.5"}, out, err);
    nlohmann::json doc = code == 0 ? nlohmann::json::parse(out.str()) : nlohmann::json();
    doc.erase("timings");
    return doc;
  };
  const nlohmann::json a = report();
  const nlohmann::json b = report();
  o.require(!a.is_null() && a == b, "reports differ for the same seed");
  std::filesystem::remove_all(dir);
  o.detail = "200 instances, " + std::to_string(within) + "/200 within (2+eps) OPT (" + num(100.0 * share) +
             "%), feasible 100%, seeded report reproducible";
  return o;
}

Outcome criterion_decomposition() {
  Outcome o;
  std::mt19937_64 rng(6006);
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const double beta = 0.25 + 4.0 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const Graph g = fctest::random_tree(n, beta, rng(), WeightMode::bfc_raw);
    const Tree t = singleton_or_whole(g);
    const std::vector<Tree> pieces = edge_decompose(g, t, beta);
    const std::string tag = "tree " + std::to_string(trial);
    std::multiset<EdgeId> used;
    for (const Tree& p : pieces) {
      try {
        validate_tree(g, p);
      } catch (const std::exception&) {
        o.require(false, tag + ": piece is not a tree");
      }
      o.require(tree_weight(g, p) <= 2.0 * beta + kIndexTolerance, tag + ": piece weight above 2 beta");
      used.insert(p.edges.begin(), p.edges.end());
    }
    o.require(std::vector<EdgeId>(used.begin(), used.end()) == t.edges, tag + ": edges not partitioned");
    const double cap = std::max(tree_weight(g, t) / beta, 1.0);
    o.require(static_cast<double>(pieces.size()) <= cap + kIndexTolerance, tag + ": too many pieces");
    worst_ratio = std::max(worst_ratio, static_cast<double>(pieces.size()) / cap);
  }
  o.detail = "500 trees, max count / max(w/beta,1) = " + num(worst_ratio);
  return o;
}

Outcome criterion_bfc() {
  Outcome o;
  int checked = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    std::mt19937_64 rng(derive_seed(7007, static_cast<std::uint64_t>(trial)));
    GeneratorParams gp = random_params(rng(), 7);
    gp.max_weight = 0.5 + 4.0 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const Graph g = generate(GeneratorKind::gnp_bfc, gp);
    const double lambda = gp.max_weight;
    const BfcSolution s = bfc_6approx(g, lambda);
    const int opt = exact_bfc(g, lambda).count;
    const std::string tag = "trial " + std::to_string(trial);
    ++checked;
    std::vector<bool> covered(static_cast<std::size_t>(g.vertex_count()), false);
    for (const Tree& t : s.trees) {
      o.require(tree_weight(g, t) <= lambda + kIndexTolerance, tag + ": tree above lambda");
      for (VertexId v : t.vertices) covered[v] = true;
    }
    o.require(is_vertex_cover(g, covered), tag + ": not a cover");
    o.require(is_valid_bfc(g, s.trees, lambda), tag + ": invalid trees");
    o.require(s.count() <= 6 * opt, tag + ": count " + std::to_string(s.count()) + " > 6 OPT " + std::to_string(opt));
    o.require(std::abs(s.transformed_wi - s.transformed_wi_after_split) <= kIndexTolerance,
              tag + ": heavy-edge removal changed the weighted index");
    if (opt > 0) worst = std::max(worst, static_cast<double>(s.count()) / opt);
  }
  o.detail = std::to_string(checked) + " instances, max count/OPT " + num(worst);
  return o;
}

Outcome criterion_formulas() {
  Outcome o;
  std::mt19937_64 rng(8008);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (unit(rng) < 0.4) edges.push_back({u, v, unit(rng)});
      }
    }
    const Graph g(n, edges);
    std::vector<bool> vf(static_cast<std::size_t>(n));
    std::vector<bool> ef(edges.size());
    for (auto&& b : vf) b = unit(rng) < 0.7;
    for (auto&& b : ef) b = unit(rng) < 0.6;
    Forest f;
    for (const Component& c : connected_components(g, vf, ef)) {
      // Random spanning tree of the block: Kruskal over shuffled edges.
      std::vector<EdgeId> order = c.edges;
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<double> w(static_cast<std::size_t>(g.edge_count()), 1.0);
      for (std::size_t i = 0; i < order.size(); ++i) w[order[i]] = static_cast<double>(i) / (order.size() + 1.0);
      const Graph shuffled = g.with_weights(w, WeightMode::fc_normalized);
      f.trees.push_back(kruskal_mst(shuffled, c));
    }
    const double a = weighted_index(g, f);
    const double b = weighted_index_by_sizes(g, f);
    worst = std::max(worst, std::abs(a - b));
    o.require(std::abs(a - b) <= kFormulaTolerance, "forest " + std::to_string(trial) + ": " + num(a) + " vs " + num(b));
  }
  o.detail = "1000 forests, max |diff| " + num(worst);
  return o;
}

Outcome criterion_vertex_cover() {
  Outcome o;
  long graphs = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const fctest::SmallGraph& sg : fctest::nonisomorphic_graphs(n)) {
      const Graph base = fctest::to_graph(sg, std::vector<double>(static_cast<std::size_t>(sg.edge_count()), 0.5));
      const Graph g = from_vertex_cover(base);
      const double wi = exact_fc(g).wi;
      const int vc = fctest::min_vertex_cover(g);
      ++graphs;
      o.require(wi == static_cast<double>(vc), "n=" + std::to_string(n) + ": exact " + num(wi) + " vs VC " + std::to_string(vc));
    }
  }
  o.detail = std::to_string(graphs) + " graphs (all isomorphism classes, n <= 7)";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "binary 2-approximation", 120.0, criterion_binary},
      {2, "duality lower bound", 120.0, criterion_duality},
      {3, "separation oracle", 60.0, criterion_separation},
      {4, "LP rounding", 300.0, criterion_rounding},
      {5, "randomized (2+eps)", 600.0, criterion_randomized},
      {6, "edge decomposition", 30.0, criterion_decomposition},
      {7, "bounded forest cover 6-approximation", 600.0, criterion_bfc},
      {8, "weighted index formulas", 60.0, criterion_formulas},
      {9, "vertex cover reduction", 60.0, criterion_vertex_cover},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    // Criterion 2 reuses the suite built for criterion 1; charge it the build time too.
    if (c.id == 1 || c.id == 2) seconds = std::max(seconds, binary_suite().seconds);
    const bool in_time = seconds <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("[%s] %d %s: %s (%.2f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), seconds, c.limit_seconds);
    for (const std::string& f : o.failures) std::printf("       %s\n", f.c_str());
    if (!in_time) std::printf("       runtime limit exceeded\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
