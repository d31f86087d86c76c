#include "lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <cstdlib>

#include "errors.hpp"

namespace avck {

namespace {

constexpr double kPivotTol = 1e-10;
constexpr double kCostTol = 1e-10;
constexpr double kFeasTol = 1e-9;

// Dense simplex tableau. Columns: structural vars, slacks, artificials, rhs.
// Row 0..m-1 are constraints, the cost row is kept separately.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * (cols + 1), 0.0), cost_(cols + 1, 0.0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return data_[r * (cols_ + 1) + cols_]; }
  double rhs(std::size_t r) const { return data_[r * (cols_ + 1) + cols_]; }
  double& cost(std::size_t c) { return cost_[c]; }
  double cost(std::size_t c) const { return cost_[c]; }
  double& cost_rhs() { return cost_[cols_]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t pr, std::size_t pc) {
    double piv = at(pr, pc);
    double inv = 1.0 / piv;
    for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) *= inv;
    at(pr, pc) = 1.0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
    double f = cost_[pc];
    if (f != 0.0) {
      for (std::size_t c = 0; c <= cols_; ++c) cost_[c] -= f * at(pr, c);
      cost_[pc] = 0.0;
    }
  }

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
  std::vector<double> cost_;
};

// Runs the pivot loop on the current cost row. `allowed` masks columns that
// may enter the basis. Returns false if the problem is unbounded below.
//
// Degeneracy is handled with the lexicographic ratio test: the artificial
// block starts as the identity and is carried through every pivot, so its
// columns are the rows of the basis inverse. Breaking ratio ties by the
// lexicographically smallest scaled row makes every pivot strictly decrease
// the lexicographic objective, which rules out cycling.
bool run_simplex(Tableau& t, std::vector<std::size_t>& basis,
                 const std::vector<bool>& allowed, std::size_t binv_start) {
  const std::size_t m = t.rows();
  const std::size_t n = t.cols();
  const std::size_t hard_budget = 500 * (m + n) + 20000;

  for (std::size_t iter = 0; iter < hard_budget; ++iter) {
    // entering column: most negative reduced cost
    std::size_t enter = n;
    double best = -kCostTol;
    for (std::size_t c = 0; c < n; ++c) {
      if (!allowed[c]) continue;
      double rc = t.cost(c);
      if (rc < best) {
        best = rc;
        enter = c;
      }
    }
    if (enter == n) return true;  // optimal

    // leaving row: lexicographic minimum of (rhs, basis inverse row) / pivot
    std::size_t leave = m;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < m; ++r) {
      double a = t.at(r, enter);
      if (a <= kPivotTol) continue;
      double ratio = t.rhs(r) / a;
      if (leave == m || ratio < best_ratio - 1e-12) {
        best_ratio = ratio;
        leave = r;
        continue;
      }
      if (ratio > best_ratio + 1e-12) continue;
      // tie: compare scaled basis-inverse rows
      double pivot_leave = t.at(leave, enter);
      for (std::size_t c = binv_start; c < binv_start + m; ++c) {
        double lhs = t.at(r, c) / a;
        double rhs = t.at(leave, c) / pivot_leave;
        if (lhs < rhs - 1e-12) {
          best_ratio = ratio;
          leave = r;
          break;
        }
        if (lhs > rhs + 1e-12) break;
      }
    }
    if (leave == m) {
      if (std::getenv("AVCK_LP_DEBUG")) {
        double max_entry = -1e300;
        for (std::size_t r = 0; r < m; ++r) max_entry = std::max(max_entry, t.at(r, enter));
        std::fprintf(stderr, "lp: no leaving row at iter %zu enter %zu rc %.3e max %.3e\n",
                     iter, enter, t.cost(enter), max_entry);
      }
      return false;  // unbounded
    }

    t.pivot(leave, enter);
    basis[leave] = enter;
  }
  throw numeric_error("solve_lp: simplex iteration budget exhausted");
}

}  // namespace

LpSolution solve_lp(const LpProblem& p) {
  const std::size_t n_struct = p.num_vars;
  const std::size_t n_eq = p.eq_rows.size();
  const std::size_t n_ub = p.ub_rows.size();
  const std::size_t m = n_eq + n_ub;
  const std::size_t n_slack = n_ub;
  const std::size_t n_total = n_struct + n_slack + m;  // artificials last

  Tableau t(m, n_total);
  std::vector<std::size_t> basis(m);

  for (std::size_t r = 0; r < m; ++r) {
    const bool is_eq = r < n_eq;
    const std::vector<double>& row = is_eq ? p.eq_rows[r] : p.ub_rows[r - n_eq];
    double rhs = is_eq ? p.eq_rhs[r] : p.ub_rhs[r - n_eq];
    for (std::size_t c = 0; c < n_struct; ++c) t.at(r, c) = row[c];
    if (!is_eq) t.at(r, n_struct + (r - n_eq)) = 1.0;
    t.rhs(r) = rhs;
    if (t.rhs(r) < 0.0) {
      for (std::size_t c = 0; c < n_total; ++c) t.at(r, c) = -t.at(r, c);
      t.rhs(r) = -t.rhs(r);
    }
    t.at(r, n_struct + n_slack + r) = 1.0;
    basis[r] = n_struct + n_slack + r;
  }

  // Phase 1: minimize the sum of artificials. The reduced cost row is the
  // negated sum of the constraint rows over the non-artificial columns.
  for (std::size_t c = 0; c <= n_total; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < m; ++r) s += (c < n_total) ? t.at(r, c) : t.rhs(r);
    if (c < n_total) {
      bool is_artificial = c >= n_struct + n_slack;
      t.cost(c) = is_artificial ? 0.0 : -s;
    } else {
      t.cost_rhs() = -s;
    }
  }

  std::vector<bool> allowed(n_total, true);
  if (!run_simplex(t, basis, allowed, n_struct + n_slack))
    throw numeric_error("solve_lp: phase 1 unbounded (internal inconsistency)");

  double infeas = -t.cost_rhs();
  LpSolution sol;
  sol.infeasibility = infeas;
  if (infeas > kFeasTol) {
    sol.status = LpStatus::infeasible;
    return sol;
  }

  // Drive leftover artificials out of the basis where possible; block them
  // from re-entering either way.
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] >= n_struct + n_slack) {
      for (std::size_t c = 0; c < n_struct + n_slack; ++c) {
        if (std::abs(t.at(r, c)) > kPivotTol) {
          t.pivot(r, c);
          basis[r] = c;
          break;
        }
      }
    }
  }
  for (std::size_t c = n_struct + n_slack; c < n_total; ++c) allowed[c] = false;

  // Phase 2: original objective, reduced against the current basis.
  for (std::size_t c = 0; c <= n_total; ++c) t.cost(c) = 0.0;
  for (std::size_t c = 0; c < n_struct; ++c) t.cost(c) = p.objective[c];
  for (std::size_t r = 0; r < m; ++r) {
    std::size_t b = basis[r];
    double cb = (b < n_struct) ? p.objective[b] : 0.0;
    if (cb == 0.0) continue;
    for (std::size_t c = 0; c <= n_total; ++c) {
      double v = (c < n_total) ? t.at(r, c) : t.rhs(r);
      if (c < n_total)
        t.cost(c) -= cb * v;
      else
        t.cost_rhs() -= cb * v;
    }
  }

  if (!run_simplex(t, basis, allowed, n_struct + n_slack)) {
    sol.status = LpStatus::unbounded;
    return sol;
  }

  sol.status = LpStatus::optimal;
  sol.x.assign(n_struct, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n_struct) sol.x[basis[r]] = std::max(0.0, t.rhs(r));
  sol.objective = -t.cost_rhs();
  return sol;
}

}  // namespace avck
