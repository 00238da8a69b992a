#include <doctest.h>

#include <cmath>
#include <random>

#include "forestcover/errors.hpp"
#include "forestcover/exact.hpp"
#include "forestcover/lp_relaxation.hpp"
#include "forestcover/max_flow.hpp"
#include "forestcover/simplex.hpp"
#include "oracles.hpp"

using namespace forestcover;

namespace {

Graph single_edge(double w) { return Graph(2, {{0, 1, w}}); }
Graph triangle(double w) { return Graph(3, {{0, 1, w}, {1, 2, w}, {0, 2, w}}); }
Graph path3(double w) { return Graph(3, {{0, 1, w}, {1, 2, w}}); }

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (unit(rng) < p) edges.push_back({u, v, unit(rng)});
    }
  }
  return Graph(n, edges);
}

// A point with 0 <= y_e <= min(x_u, x_v) and x in [0, 1].
FractionalSolution random_point(std::mt19937_64& rng, const Graph& g) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  FractionalSolution s;
  for (int v = 0; v < g.vertex_count(); ++v) s.x.push_back(rng() % 5 == 0 ? 0.0 : unit(rng));
  for (const Edge& e : g.edges()) s.y.push_back(rng() % 4 == 0 ? 0.0 : unit(rng) * std::min(s.x[e.u], s.x[e.v]));
  return s;
}

class CountingBackend final : public LpBackend {
 public:
  LpResult solve(const LinearProgram& lp) override {
    ++calls;
    return inner.solve(lp);
  }
  std::string name() const override { return "counting"; }
  DenseSimplex inner;
  int calls = 0;
};

class BrokenBackend final : public LpBackend {
 public:
  LpResult solve(const LinearProgram&) override { return LpResult{LpStatus::infeasible, {}, 0.0, 0}; }
  std::string name() const override { return "broken"; }
};

}  // namespace

TEST_CASE("max flow examples") {
  FlowNetwork one(2);
  one.add_arc(0, 1, 3.0);
  CHECK(one.solve(0, 1).value == doctest::Approx(3.0));

  FlowNetwork two(4);
  two.add_arc(0, 1, 1.0);
  two.add_arc(1, 3, 1.0);
  two.add_arc(0, 2, 2.0);
  two.add_arc(2, 3, 2.0);
  CHECK(two.solve(0, 3).value == doctest::Approx(3.0));

  FlowNetwork bad(2);
  CHECK_THROWS_AS(bad.add_arc(0, 1, -1.0), SolverError);
}

TEST_CASE("max flow equals exhaustive min cut on random networks") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const int nodes = 2 + static_cast<int>(rng() % 8);
    std::vector<std::vector<double>> cap(static_cast<std::size_t>(nodes), std::vector<double>(static_cast<std::size_t>(nodes), 0.0));
    FlowNetwork net(nodes);
    for (int a = 0; a < nodes; ++a) {
      for (int b = 0; b < nodes; ++b) {
        if (a == b || rng() % 3 != 0) continue;
        const double c = std::round(unit(rng) * 40.0) / 8.0;
        cap[a][b] += c;
        net.add_arc(a, b, c);
      }
    }
    const MaxFlowResult r = net.solve(0, nodes - 1);
    CHECK(r.value == doctest::Approx(fctest::brute_min_cut(cap, 0, nodes - 1)));
    REQUIRE(r.source_side[0]);
    REQUIRE_FALSE(r.source_side[nodes - 1]);
    CHECK(net.cut_capacity(r.source_side) == doctest::Approx(r.value));
    // Solving again starts from zero flow.
    CHECK(net.solve(0, nodes - 1).value == doctest::Approx(r.value));
  }
}

TEST_CASE("simplex on textbook programs") {
  DenseSimplex s;
  // min -x - y  s.t. x + 2y <= 4, 3x + y <= 6  -> x = 1.6, y = 1.2
  LinearProgram a{2, {-1.0, -1.0}, {{{{0, 1.0}, {1, 2.0}}, RowSense::less_equal, 4.0}, {{{0, 3.0}, {1, 1.0}}, RowSense::less_equal, 6.0}}};
  LpResult r = s.solve(a);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == doctest::Approx(-2.8));
  CHECK(r.values[0] == doctest::Approx(1.6));

  LinearProgram eq{2, {1.0, 2.0}, {{{{0, 1.0}, {1, 1.0}}, RowSense::equal, 3.0}, {{{0, 1.0}}, RowSense::less_equal, 1.0}}};
  r = s.solve(eq);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == doctest::Approx(5.0));

  LinearProgram infeasible{1, {1.0}, {{{{0, 1.0}}, RowSense::greater_equal, 2.0}, {{{0, 1.0}}, RowSense::less_equal, 1.0}}};
  CHECK(s.solve(infeasible).status == LpStatus::infeasible);

  LinearProgram unbounded{1, {-1.0}, {{{{0, 1.0}}, RowSense::greater_equal, 1.0}}};
  CHECK(s.solve(unbounded).status == LpStatus::unbounded);

  LinearProgram negative_rhs{1, {1.0}, {{{{0, -1.0}}, RowSense::less_equal, -2.0}}};
  r = s.solve(negative_rhs);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == doctest::Approx(2.0));
}

TEST_CASE("simplex matches vertex enumeration on random bounded programs") {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<int> coef(-3, 3);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    LinearProgram lp;
    lp.variable_count = n;
    for (int j = 0; j < n; ++j) lp.objective.push_back(coef(rng));
    for (int j = 0; j < n; ++j) lp.rows.push_back({{{j, 1.0}}, RowSense::less_equal, 3.0});  // bounded
    const int extra = static_cast<int>(rng() % 4);
    for (int i = 0; i < extra; ++i) {
      LinearRow row;
      for (int j = 0; j < n; ++j) {
        if (const int c = coef(rng)) row.terms.emplace_back(j, c);
      }
      row.sense = static_cast<RowSense>(rng() % 3);
      row.rhs = coef(rng);
      lp.rows.push_back(row);
    }
    const double reference = fctest::vertex_enumeration_lp(lp);
    const LpResult r = DenseSimplex().solve(lp);
    if (std::isinf(reference)) {
      CHECK(r.status == LpStatus::infeasible);
      continue;
    }
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.objective == doctest::Approx(reference).epsilon(1e-9));
    ++solved;
  }
  CHECK(solved > 100);
}

TEST_CASE("base LP examples") {
  const Graph e1 = single_edge(1.0);
  LpModel edge(e1);
  const FractionalSolution s = solve_base_lp(edge);
  CHECK(s.objective == doctest::Approx(1.0));
  CHECK(s.x[0] + s.x[1] >= 1.0 - 1e-9);

  const Graph t1 = triangle(1.0);
  LpModel tri(t1);
  CHECK_THROWS_AS(tri.add_cut(SubsetCut{{0}}), InstanceError);
  tri.add_cut(SubsetCut{{2, 0}});
  CHECK(tri.contains_cut(SubsetCut{{0, 2}}));
  BrokenBackend broken;
  CHECK_THROWS_AS(solve_base_lp(tri, broken), SolverError);
}

TEST_CASE("separation examples") {
  const Graph e = single_edge(0.5);
  const FractionalSolution half{{0.5, 0.5}, {0.5}, 0.0};
  const auto cut = separation_oracle(e, half);
  REQUIRE(cut.has_value());
  CHECK(cut->vertices == std::vector<VertexId>{0, 1});
  CHECK(cut->value == doctest::Approx(0.5));
  const auto bf = brute_force_separation(e, half);
  REQUIRE(bf.has_value());
  CHECK(bf->vertices == std::vector<VertexId>{0, 1});
  CHECK(bf->value == doctest::Approx(0.5));

  const FractionalSolution tight{{1.0, 1.0}, {1.0}, 0.0};
  CHECK_FALSE(separation_oracle(e, tight).has_value());
  CHECK(brute_force_separation(e, tight)->value == doctest::Approx(1.0));

  const Graph t = triangle(0.5);
  const FractionalSolution p{{0.6, 0.6, 0.6}, {0.4, 0.4, 0.4}, 0.0};
  const auto tc = separation_oracle(t, p);
  REQUIRE(tc.has_value());
  CHECK(tc->value == doctest::Approx(0.6));
  CHECK(tc->value == doctest::Approx(fctest::brute_subset_min(t, p.x, p.y)));
  CHECK(brute_force_separation(t, p)->vertices == std::vector<VertexId>{0, 1, 2});

  CHECK_FALSE(brute_force_separation(Graph(3, {}), FractionalSolution{{0, 0, 0}, {}, 0}).has_value());
}

TEST_CASE("separation agrees with exhaustive subsets on random points") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = random_graph(rng, n, 0.5);
    if (g.edge_count() == 0) continue;
    const FractionalSolution s = random_point(rng, g);
    const double reference = fctest::brute_subset_min(g, s.x, s.y);
    const auto best = minimum_subset(g, s);
    REQUIRE(best.has_value());
    CHECK(std::abs(best->value - reference) <= 1e-7);
    CHECK(std::abs(subset_value(g, s, best->vertices) - best->value) <= 1e-12);
    CHECK(separation_oracle(g, s).has_value() == (reference < 1.0 - 1e-7));
    for (const SubsetMinimizer& m : separation_sweep(g, s)) {
      const Edge& a = g.edge(m.anchor);
      CHECK(std::binary_search(m.vertices.begin(), m.vertices.end(), a.u));
      CHECK(std::binary_search(m.vertices.begin(), m.vertices.end(), a.v));
    }
  }
}

TEST_CASE("cutting plane examples") {
  const CuttingPlaneResult p = cutting_plane_solve(path3(1.0));
  CHECK(p.solution.objective == doctest::Approx(1.0));
  CHECK(cutting_plane_solve(single_edge(0.0)).solution.objective == doctest::Approx(1.0));

  const Graph c4(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 0, 1.0}});
  CHECK(cutting_plane_solve(c4).solution.objective == doctest::Approx(2.0));

  const CuttingPlaneResult t = cutting_plane_solve(triangle(1.0));
  CHECK(t.solution.objective == doctest::Approx(1.5));

  CHECK_THROWS_AS(cutting_plane_solve(Graph(2, {{0, 1, 3.0}}, WeightMode::bfc_raw)), InstanceError);
}

TEST_CASE("cutting plane objectives match vertex enumeration of the full LP") {
  // Small enough for exhaustive basis enumeration of the explicit model.
  CHECK(fctest::vertex_enumeration_lp(fctest::full_fc_lp(path3(1.0))) == doctest::Approx(1.0));
  CHECK(fctest::vertex_enumeration_lp(fctest::full_fc_lp(single_edge(0.0))) == doctest::Approx(1.0));
  CHECK(fctest::vertex_enumeration_lp(fctest::full_fc_lp(triangle(1.0))) == doctest::Approx(1.5));
  const Graph mixed(3, {{0, 1, 0.2}, {1, 2, 0.7}});
  CHECK(cutting_plane_solve(mixed).solution.objective ==
        doctest::Approx(fctest::vertex_enumeration_lp(fctest::full_fc_lp(mixed))));
}

TEST_CASE("cutting plane equals the explicit full LP and stays below the optimum") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = random_graph(rng, n, 0.6);
    CountingBackend backend;
    const CuttingPlaneResult r = cutting_plane_solve(g, {}, backend);
    CHECK(backend.calls == r.iterations);
    const LpResult full = DenseSimplex().solve(fctest::full_fc_lp(g));
    REQUIRE(full.status == LpStatus::optimal);
    CHECK(r.solution.objective == doctest::Approx(full.objective).epsilon(1e-7));
    CHECK(r.solution.objective <= exact_fc(g).wi + 1e-6);
    CHECK_FALSE(separation_oracle(g, r.solution, 1e-7).has_value());
  }
}

TEST_CASE("each added cut is violated at the point that produced it") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 5), 0.7);
    LpModel model(g);
    for (int round = 0; round < 50; ++round) {
      const FractionalSolution s = solve_base_lp(model);
      const auto cut = separation_oracle(g, s, 1e-7);
      if (!cut) break;
      CHECK(subset_value(g, s, cut->vertices) < 1.0 - 1e-7);
      SubsetCut c{cut->vertices};
      REQUIRE_FALSE(model.contains_cut(c));
      model.add_cut(c);
      const FractionalSolution after = solve_base_lp(model);
      CHECK(subset_value(g, after, cut->vertices) >= 1.0 - 1e-7);
    }
  }
}

TEST_CASE("iteration cap and cut report") {
  CuttingPlaneOptions opts;
  opts.max_iterations = 1;
  CHECK_THROWS_AS(cutting_plane_solve(triangle(0.0), opts), SolverError);

  const Graph g = triangle(0.0);
  const CuttingPlaneResult r = cutting_plane_solve(g);
  const std::string report = format_cut_report(g, r);
  CHECK(report.find("S = {") != std::string::npos);
  CHECK(report.find("x 1 ") != std::string::npos);
  CHECK(report.find("y 3 ") != std::string::npos);
}
