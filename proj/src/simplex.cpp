#include "forestcover/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace forestcover {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
    case LpStatus::pivot_limit: return "pivot_limit";
  }
  return "unknown";
}

namespace {

class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows + 1) * (cols + 1), 0.0),
        basis_(static_cast<std::size_t>(rows), -1) {}

  double& at(int r, int c) { return data_[static_cast<std::size_t>(r) * (cols_ + 1) + c]; }
  double at(int r, int c) const { return data_[static_cast<std::size_t>(r) * (cols_ + 1) + c]; }
  double& rhs(int r) { return at(r, cols_); }
  double& cost(int c) { return at(rows_, c); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::vector<int>& basis() { return basis_; }

  void pivot(int r, int c) {
    const double p = at(r, c);
    double* pr = &at(r, 0);
    for (int j = 0; j <= cols_; ++j) pr[j] /= p;
    pr[c] = 1.0;
    for (int i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      double* row = &at(i, 0);
      const double f = row[c];
      if (f == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) row[j] -= f * pr[j];
      row[c] = 0.0;
    }
    basis_[r] = c;
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
  std::vector<int> basis_;
};

enum class RunStatus { optimal, unbounded, pivot_limit };

template <typename Allowed>
RunStatus run_simplex(Tableau& t, const SimplexOptions& opt, Allowed allowed, int& pivots) {
  while (true) {
    int enter = -1;
    for (int j = 0; j < t.cols(); ++j) {
      if (allowed(j) && t.cost(j) < -opt.cost_tolerance) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return RunStatus::optimal;

    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < t.rows(); ++i) {
      const double a = t.at(i, enter);
      if (a <= opt.pivot_tolerance) continue;
      const double ratio = std::max(t.rhs(i), 0.0) / a;
      if (leave < 0 || ratio < best - 1e-12 ||
          (ratio <= best + 1e-12 && t.basis()[i] < t.basis()[leave])) {
        if (leave < 0 || ratio < best - 1e-12) best = ratio;
        leave = i;
      }
    }
    if (leave < 0) return RunStatus::unbounded;
    if (++pivots > opt.max_pivots) return RunStatus::pivot_limit;
    t.pivot(leave, enter);
  }
}

}  // namespace

LpResult DenseSimplex::solve(const LinearProgram& lp) {
  const int n = lp.variable_count;
  const int m = static_cast<int>(lp.rows.size());

  // Normalise every row to a non-negative right-hand side; a >= row with zero
  // rhs becomes a <= row so its slack can start in the basis.
  struct NormRow {
    std::vector<std::pair<int, double>> terms;
    RowSense sense;
    double rhs;
  };
  std::vector<NormRow> rows;
  rows.reserve(static_cast<std::size_t>(m));
  for (const LinearRow& row : lp.rows) {
    NormRow nr{row.terms, row.sense, row.rhs};
    const bool flip = nr.rhs < 0.0 || (nr.rhs == 0.0 && nr.sense == RowSense::greater_equal);
    if (flip) {
      for (auto& term : nr.terms) term.second = -term.second;
      nr.rhs = -nr.rhs;
      if (nr.sense == RowSense::greater_equal) nr.sense = RowSense::less_equal;
      else if (nr.sense == RowSense::less_equal) nr.sense = RowSense::greater_equal;
    }
    rows.push_back(std::move(nr));
  }

  int slack_count = 0;
  int artificial_count = 0;
  for (const NormRow& r : rows) {
    if (r.sense != RowSense::equal) ++slack_count;
    if (r.sense != RowSense::less_equal) ++artificial_count;
  }
  const int first_slack = n;
  const int first_artificial = n + slack_count;
  const int cols = n + slack_count + artificial_count;

  Tableau t(m, cols);
  int next_slack = first_slack;
  int next_art = first_artificial;
  for (int i = 0; i < m; ++i) {
    const NormRow& r = rows[i];
    for (auto [var, coef] : r.terms) t.at(i, var) += coef;
    t.rhs(i) = r.rhs;
    if (r.sense == RowSense::less_equal) {
      t.at(i, next_slack) = 1.0;
      t.basis()[i] = next_slack++;
    } else {
      if (r.sense == RowSense::greater_equal) t.at(i, next_slack++) = -1.0;
      t.at(i, next_art) = 1.0;
      t.basis()[i] = next_art++;
    }
  }

  LpResult result;
  auto is_artificial = [&](int j) { return j >= first_artificial && j < cols; };

  // Phase 1: minimise the sum of artificials.
  if (artificial_count > 0) {
    for (int j = 0; j <= cols; ++j) t.at(m, j) = 0.0;
    for (int i = 0; i < m; ++i) {
      if (!is_artificial(t.basis()[i])) continue;
      for (int j = 0; j <= cols; ++j) {
        if (!is_artificial(j)) t.at(m, j) -= t.at(i, j);
      }
    }
    const RunStatus s = run_simplex(t, options_, [](int) { return true; }, result.pivots);
    if (s == RunStatus::pivot_limit) {
      result.status = LpStatus::pivot_limit;
      return result;
    }
    if (-t.rhs(m) > options_.feasibility_tolerance) {
      result.status = LpStatus::infeasible;
      return result;
    }
    // Drive zero-level artificials out of the basis where possible; rows where
    // that fails are redundant and stay inert.
    for (int i = 0; i < m; ++i) {
      if (!is_artificial(t.basis()[i])) continue;
      for (int j = 0; j < first_artificial; ++j) {
        if (std::abs(t.at(i, j)) > options_.pivot_tolerance) {
          t.pivot(i, j);
          break;
        }
      }
    }
  }

  // Phase 2: reduced costs for the real objective.
  for (int j = 0; j <= cols; ++j) t.at(m, j) = 0.0;
  for (int j = 0; j < n; ++j) t.at(m, j) = lp.objective[j];
  for (int i = 0; i < m; ++i) {
    const int b = t.basis()[i];
    const double cb = b < n ? lp.objective[b] : 0.0;
    if (cb == 0.0) continue;
    for (int j = 0; j <= cols; ++j) t.at(m, j) -= cb * t.at(i, j);
  }
  const RunStatus s = run_simplex(t, options_, [&](int j) { return !is_artificial(j); }, result.pivots);
  if (s == RunStatus::unbounded) {
    result.status = LpStatus::unbounded;
    return result;
  }
  if (s == RunStatus::pivot_limit) {
    result.status = LpStatus::pivot_limit;
    return result;
  }

  result.values.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < m; ++i) {
    const int b = t.basis()[i];
    if (b < n) result.values[b] = std::max(t.rhs(i), 0.0);
  }
  result.objective = 0.0;
  for (int j = 0; j < n; ++j) result.objective += lp.objective[j] * result.values[j];
  result.status = LpStatus::optimal;
  return result;
}

}  // namespace forestcover
