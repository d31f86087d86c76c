#pragma once

#include <cstddef>
#include <vector>

// Small dense linear programming. Problems in this library are tiny (at most
// a few hundred variables and rows), so a two-phase primal simplex on a dense
// tableau is adequate and gives exact vertex solutions.

namespace avck {

/// minimize  c.x
/// subject   eq_rows x == eq_rhs
///           ub_rows x <= ub_rhs
///           x >= 0
struct LpProblem {
  std::size_t num_vars = 0;
  std::vector<double> objective;
  std::vector<std::vector<double>> eq_rows;
  std::vector<double> eq_rhs;
  std::vector<std::vector<double>> ub_rows;
  std::vector<double> ub_rhs;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  double objective = 0.0;
  std::vector<double> x;  // primal point, size num_vars (when optimal)
  double infeasibility = 0.0;  // phase-1 residual, for diagnostics
};

/// Two-phase dense simplex with anti-cycling fallback. Throws numeric_error
/// if the pivot loop fails to terminate within the iteration budget.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace avck
