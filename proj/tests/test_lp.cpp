#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "lp.hpp"

using namespace avck;

namespace {

// Brute-force oracle: enumerate all basic solutions of the standard-form
// system (equalities plus slack-augmented inequalities) and take the best
// feasible one. Only viable for tiny instances.
double brute_force_lp(const LpProblem& p, bool* feasible) {
  std::size_t n = p.num_vars + p.ub_rows.size();
  std::size_t m = p.eq_rows.size() + p.ub_rows.size();
  auto coeff = [&](std::size_t r, std::size_t c) -> double {
    if (r < p.eq_rows.size()) return c < p.num_vars ? p.eq_rows[r][c] : 0.0;
    std::size_t ur = r - p.eq_rows.size();
    if (c < p.num_vars) return p.ub_rows[ur][c];
    return (c - p.num_vars) == ur ? 1.0 : 0.0;
  };
  auto rhs = [&](std::size_t r) {
    return r < p.eq_rows.size() ? p.eq_rhs[r] : p.ub_rhs[r - p.eq_rows.size()];
  };

  *feasible = false;
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> idx(m);

  // iterate over all m-subsets of columns
  std::vector<std::size_t> comb(m);
  for (std::size_t i = 0; i < m; ++i) comb[i] = i;
  while (true) {
    // solve the square system on the chosen columns by Gaussian elimination
    std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) a[r][c] = coeff(r, comb[c]);
      a[r][m] = rhs(r);
    }
    bool singular = false;
    for (std::size_t col = 0; col < m && !singular; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < m; ++r)
        if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
      if (std::abs(a[piv][col]) < 1e-11) {
        singular = true;
        break;
      }
      std::swap(a[col], a[piv]);
      for (std::size_t r = 0; r < m; ++r) {
        if (r == col) continue;
        double f = a[r][col] / a[col][col];
        for (std::size_t c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
      }
    }
    if (!singular) {
      std::vector<double> x(n, 0.0);
      bool ok = true;
      for (std::size_t c = 0; c < m; ++c) {
        double v = a[c][m] / a[c][c];
        if (v < -1e-9) ok = false;
        x[comb[c]] = v;
      }
      if (ok) {
        *feasible = true;
        double obj = 0.0;
        for (std::size_t c = 0; c < p.num_vars; ++c) obj += p.objective[c] * x[c];
        best = std::min(best, obj);
      }
    }

    // next combination
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (comb[i] != i + n - m) {
        ++comb[i];
        for (std::size_t j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
        break;
      }
      if (i == 0) return *feasible ? best : 0.0;
    }
  }
}

}  // namespace

TEST_CASE("lp solves a textbook instance") {
  // max x + y  s.t.  x + 2y <= 4, 3x + y <= 6   (min of the negation)
  LpProblem p;
  p.num_vars = 2;
  p.objective = {-1.0, -1.0};
  p.ub_rows = {{1.0, 2.0}, {3.0, 1.0}};
  p.ub_rhs = {4.0, 6.0};
  LpSolution s = solve_lp(p);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.objective == doctest::Approx(-2.8).epsilon(1e-10));
  CHECK(s.x[0] == doctest::Approx(1.6).epsilon(1e-9));
  CHECK(s.x[1] == doctest::Approx(1.2).epsilon(1e-9));
}

TEST_CASE("lp handles equality constraints") {
  // min x0 + x1 with x0 + x1 + x2 = 1, x0 - x1 = 0.2
  LpProblem p;
  p.num_vars = 3;
  p.objective = {1.0, 1.0, 0.0};
  p.eq_rows = {{1.0, 1.0, 1.0}, {1.0, -1.0, 0.0}};
  p.eq_rhs = {1.0, 0.2};
  LpSolution s = solve_lp(p);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.objective == doctest::Approx(0.2).epsilon(1e-10));
  CHECK(s.x[0] == doctest::Approx(0.2).epsilon(1e-9));
  CHECK(s.x[1] == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("lp detects infeasibility") {
  LpProblem p;
  p.num_vars = 2;
  p.objective = {1.0, 1.0};
  p.eq_rows = {{1.0, 1.0}};
  p.eq_rhs = {1.0};
  p.ub_rows = {{-1.0, -1.0}};  // x0 + x1 >= 2
  p.ub_rhs = {-2.0};
  LpSolution s = solve_lp(p);
  CHECK(s.status == LpStatus::infeasible);
}

TEST_CASE("lp detects unboundedness") {
  LpProblem p;
  p.num_vars = 2;
  p.objective = {-1.0, 0.0};
  p.ub_rows = {{0.0, 1.0}};
  p.ub_rhs = {1.0};
  LpSolution s = solve_lp(p);
  CHECK(s.status == LpStatus::unbounded);
}

TEST_CASE("lp survives a degenerate vertex") {
  // three constraints meeting at the optimum (0,1)
  LpProblem p;
  p.num_vars = 2;
  p.objective = {-0.0, -1.0};
  p.ub_rows = {{1.0, 1.0}, {-1.0, 1.0}, {0.0, 1.0}};
  p.ub_rhs = {1.0, 1.0, 1.0};
  LpSolution s = solve_lp(p);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.objective == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("lp matches brute-force vertex enumeration on random instances") {
  std::mt19937_64 rng(9090);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::uniform_int_distribution<int> dim(1, 3);
  int solved = 0;
  for (int trial = 0; trial < 250; ++trial) {
    LpProblem p;
    p.num_vars = static_cast<std::size_t>(dim(rng)) + 1;
    int n_eq = dim(rng) - 1;
    int n_ub = dim(rng);
    p.objective.resize(p.num_vars);
    for (double& v : p.objective) v = unif(rng);
    for (int r = 0; r < n_eq; ++r) {
      std::vector<double> row(p.num_vars);
      for (double& v : row) v = unif(rng);
      p.eq_rows.push_back(row);
      p.eq_rhs.push_back(std::abs(unif(rng)));
    }
    for (int r = 0; r < n_ub; ++r) {
      std::vector<double> row(p.num_vars);
      for (double& v : row) v = unif(rng);
      p.ub_rows.push_back(row);
      p.ub_rhs.push_back(unif(rng));
    }
    // bound the feasible set so the comparison is always well defined
    p.ub_rows.push_back(std::vector<double>(p.num_vars, 1.0));
    p.ub_rhs.push_back(4.0);

    bool oracle_feasible = false;
    double oracle = brute_force_lp(p, &oracle_feasible);
    LpSolution s = solve_lp(p);
    if (!oracle_feasible) {
      CHECK(s.status == LpStatus::infeasible);
      continue;
    }
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective == doctest::Approx(oracle).epsilon(1e-7));
    ++solved;
  }
  CHECK(solved > 100);  // the generator must actually exercise feasible cases
}
