#pragma once

#include <string>
#include <utility>
#include <vector>

namespace forestcover {

enum class RowSense { greater_equal, less_equal, equal };

struct LinearRow {
  std::vector<std::pair<int, double>> terms;  // (variable, coefficient)
  RowSense sense = RowSense::greater_equal;
  double rhs = 0.0;
};

// minimize objective . v  subject to rows, v >= 0.
struct LinearProgram {
  int variable_count = 0;
  std::vector<double> objective;
  std::vector<LinearRow> rows;
};

enum class LpStatus { optimal, infeasible, unbounded, pivot_limit };

const char* to_string(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::vector<double> values;
  double objective = 0.0;
  int pivots = 0;
};

// Anything that can solve a LinearProgram to a basic optimum.
class LpBackend {
 public:
  virtual ~LpBackend() = default;
  virtual LpResult solve(const LinearProgram& lp) = 0;
  virtual std::string name() const = 0;
};

struct SimplexOptions {
  double pivot_tolerance = 1e-9;
  double cost_tolerance = 1e-9;
  double feasibility_tolerance = 1e-8;
  int max_pivots = 200000;
};

// Two-phase dense tableau simplex. Bland's rule on both entering and leaving
// choices, so it terminates on degenerate problems.
class DenseSimplex final : public LpBackend {
 public:
  explicit DenseSimplex(SimplexOptions options = {}) : options_(options) {}

  LpResult solve(const LinearProgram& lp) override;
  std::string name() const override { return "dense-simplex-bland"; }

 private:
  SimplexOptions options_;
};

}  // namespace forestcover
