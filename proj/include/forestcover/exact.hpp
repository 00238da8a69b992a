#pragma once

#include <optional>
#include <vector>

#include "forestcover/graph.hpp"
#include "forestcover/lp_relaxation.hpp"

namespace forestcover {

// Size limits for the exponential oracles. Requests beyond them throw
// BudgetExceeded rather than being truncated.
struct ExactBudget {
  int max_n = 8;
  int max_edges = 28;

  static constexpr ExactBudget fc() { return {8, 28}; }
  static constexpr ExactBudget bfc() { return {7, 21}; }
  static constexpr ExactBudget separation() { return {10, 45}; }
};

struct ExactFcResult {
  Forest forest;
  double wi = 0.0;
  std::vector<VertexId> cover;
};

// Minimum weighted index by enumerating vertex covers S; for fixed S the best
// forest is a maximum (1 - w) spanning forest of G[S]. Ties go to the
// lexicographically smallest S.
ExactFcResult exact_fc(const Graph& graph, ExactBudget budget = ExactBudget::fc());

struct ExactBfcResult {
  std::vector<Tree> trees;
  int count = 0;
};

// Fewest trees of weight <= lambda whose vertex union is a vertex cover.
// Trees may overlap. A vertex set is usable as one tree iff it induces a
// connected subgraph whose MST weighs at most lambda.
ExactBfcResult exact_bfc(const Graph& graph, double lambda, ExactBudget budget = ExactBudget::bfc());

struct SubsetValue {
  std::vector<VertexId> vertices;
  double value = 0.0;
};

// Minimum of sum_{S} x - sum_{E(S)} y over every S with E(S) nonempty, by
// enumeration; nullopt on an edgeless graph.
std::optional<SubsetValue> brute_force_separation(const Graph& graph, const FractionalSolution& sol,
                                                  ExactBudget budget = ExactBudget::separation());

}  // namespace forestcover
