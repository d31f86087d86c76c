#include "symmetrize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include "lp.hpp"

namespace avck {

namespace {

constexpr double kParamEq = 1e-12;  // exact-parameter comparisons

std::size_t u_index(std::size_t x, std::size_t s, std::size_t num_states) {
  return x * num_states + s;
}

}  // namespace

double symmetrizer_residual(const Avc& avc, const Channel& u) {
  const std::size_t nx = avc.input_size();
  const std::size_t ny = avc.output_size();
  const std::size_t ns = avc.num_states();
  if (u.input_size() != nx || u.output_size() != ns)
    throw domain_error("symmetrizer_residual: strategy has wrong shape");
  double worst = 0.0;
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t xp = x + 1; xp < nx; ++xp)
      for (std::size_t y = 0; y < ny; ++y) {
        double lhs = 0.0, rhs = 0.0;
        for (std::size_t s = 0; s < ns; ++s) {
          lhs += avc.states[s](y, x) * u(s, xp);
          rhs += avc.states[s](y, xp) * u(s, x);
        }
        worst = std::max(worst, std::abs(lhs - rhs));
      }
  return worst;
}

SymmetrizerResult symmetrizability_distance(const Avc& avc) {
  const std::size_t nx = avc.input_size();
  const std::size_t ny = avc.output_size();
  const std::size_t ns = avc.num_states();
  if (nx < 2)
    throw domain_error("symmetrizability_distance: needs at least two input symbols");

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t xp = x + 1; xp < nx; ++xp) pairs.emplace_back(x, xp);

  // variables: u(s|x) for each (x,s), then one epigraph variable per
  // (pair, output) for the absolute values, then the max epigraph t
  const std::size_t n_u = nx * ns;
  const std::size_t n_e = pairs.size() * ny;
  const std::size_t n_vars = n_u + n_e + 1;
  const std::size_t t_var = n_vars - 1;

  LpProblem lp;
  lp.num_vars = n_vars;
  lp.objective.assign(n_vars, 0.0);
  lp.objective[t_var] = 1.0;

  // each column of U is a distribution
  for (std::size_t x = 0; x < nx; ++x) {
    std::vector<double> row(n_vars, 0.0);
    for (std::size_t s = 0; s < ns; ++s) row[u_index(x, s, ns)] = 1.0;
    lp.eq_rows.push_back(std::move(row));
    lp.eq_rhs.push_back(1.0);
  }

  // |expr(pair, y)| <= e(pair, y), sum_y e(pair, y) <= t
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [x, xp] = pairs[k];
    for (std::size_t y = 0; y < ny; ++y) {
      std::vector<double> coeff(n_vars, 0.0);
      for (std::size_t s = 0; s < ns; ++s) {
        coeff[u_index(x, s, ns)] += avc.states[s](y, xp);
        coeff[u_index(xp, s, ns)] -= avc.states[s](y, x);
      }
      std::size_t e_var = n_u + k * ny + y;
      std::vector<double> pos = coeff;
      pos[e_var] = -1.0;
      lp.ub_rows.push_back(std::move(pos));
      lp.ub_rhs.push_back(0.0);
      for (double& c : coeff) c = -c;
      coeff[e_var] = -1.0;
      lp.ub_rows.push_back(std::move(coeff));
      lp.ub_rhs.push_back(0.0);
    }
    std::vector<double> sum_row(n_vars, 0.0);
    for (std::size_t y = 0; y < ny; ++y) sum_row[n_u + k * ny + y] = 1.0;
    sum_row[t_var] = -1.0;
    lp.ub_rows.push_back(std::move(sum_row));
    lp.ub_rhs.push_back(0.0);
  }

  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal)
    throw numeric_error("symmetrizability_distance: LP did not reach an optimum");

  std::vector<double> u_matrix(nx * ns);
  for (std::size_t x = 0; x < nx; ++x) {
    double col = 0.0;
    for (std::size_t s = 0; s < ns; ++s) col += sol.x[u_index(x, s, ns)];
    for (std::size_t s = 0; s < ns; ++s)
      u_matrix[s * nx + x] = std::min(1.0, std::max(0.0, sol.x[u_index(x, s, ns)] / col));
  }
  Channel u(nx, ns, std::move(u_matrix));

  SymmetrizerResult result;
  result.f_value = std::max(0.0, sol.objective);
  result.u = u;
  result.residual = symmetrizer_residual(avc, u);
  result.feasible = result.f_value <= kSymmetrizableTol;
  return result;
}

SymmetrizerResult is_symmetrizable(const Avc& avc, double tol) {
  if (!(tol > 0.0)) throw domain_error("is_symmetrizable: tolerance must be positive");
  SymmetrizerResult result = symmetrizability_distance(avc);
  result.feasible = result.f_value <= tol;
  return result;
}

double bsc_pair_symmetrizer_offset(double w1, double w2) {
  if (w1 == w2)
    throw domain_error("bsc_pair_symmetrizer: equal states, jammer has no influence");
  return (1.0 - w1 - w2) / (w2 - w1);
}

SymmetrizerResult bsc_pair_symmetrizer(double w1, double w2) {
  if (!(w1 >= 0.0 && w1 <= 1.0 && w2 >= 0.0 && w2 <= 1.0))
    throw domain_error("bsc_pair_symmetrizer: parameters outside [0,1]");
  const double offset = bsc_pair_symmetrizer_offset(w1, w2);

  SymmetrizerResult result;
  if (std::abs(offset) > 1.0) {
    result.feasible = false;
    result.f_value = std::numeric_limits<double>::infinity();
    result.residual = std::numeric_limits<double>::infinity();
    return result;
  }
  // centered solution: u(1|0) = u(1|1) = (1-offset)/2, so U is the constant
  // strategy whose state mixture turns the pair into BSC(1/2)
  const double u10 = (1.0 - offset) / 2.0;
  Channel u(2, 2, {u10, u10, 1.0 - u10, 1.0 - u10});
  result.feasible = true;
  result.u = u;
  result.residual = symmetrizer_residual(Avc::bsc_family({w1, w2}), u);
  result.f_value = 0.0;
  return result;
}

TripleClassification classify_triple(const std::array<std::array<double, 2>, 3>& w) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(w[i][0] - w[i][1]) <= kParamEq)
      return {TripleVerdict::hypothesis_violated,
              "component " + std::to_string(i + 1) + " has equal states"};
    for (int j = 0; j < 2; ++j)
      if (std::abs(w[i][j] - 0.5) <= kParamEq)
        return {TripleVerdict::hypothesis_violated,
                "component " + std::to_string(i + 1) + " has a parameter of 1/2"};
  }
  bool all_flips = true;
  for (int i = 0; i < 3; ++i)
    if (std::abs(w[i][1] - (1.0 - w[i][0])) > kParamEq) all_flips = false;
  if (all_flips) return {TripleVerdict::exceptional_flip_case, "all components are flip pairs"};
  return {TripleVerdict::non_symmetrizable, ""};
}

PairFlipVerdict classify_pair_with_flip(double w11, double w12, double w21) {
  if (std::abs(w21 - 0.5) <= kParamEq) return PairFlipVerdict::excluded;
  if (std::abs(w11 - w12) <= kParamEq && std::abs(w11 - 0.5) <= kParamEq)
    return PairFlipVerdict::excluded;
  return std::abs(w12 - (1.0 - w11)) <= kParamEq ? PairFlipVerdict::symmetrizable
                                                 : PairFlipVerdict::not_symmetrizable;
}

RegionScan region_scan(int k, double step, double w21, double w31, double w32, double tol) {
  if (k < 1 || k > 3) throw domain_error("region_scan: k must be 1, 2 or 3");
  if (!(step > 0.0 && step < 0.5)) throw domain_error("region_scan: step must be in (0, 0.5)");

  RegionScan scan;
  scan.k = k;
  scan.step = step;
  scan.w21 = w21;
  scan.w31 = w31;
  scan.w32 = w32;

  const std::size_t n = static_cast<std::size_t>(std::llround(1.0 / step));
  auto grid_value = [&](std::size_t i) {
    return std::min(1.0, static_cast<double>(i) * step);
  };

  const double half_band = 1e-9;
  for (std::size_t i = 0; i <= n; ++i) {
    double w11 = grid_value(i);
    for (std::size_t j = 0; j <= n; ++j) {
      double w12 = grid_value(j);

      CompositeSpec spec;
      spec.components.push_back(Avc::bsc_family({w11, w12}));
      if (k >= 2) spec.components.push_back(Avc::bsc_family({w21, 1.0 - w21}));
      if (k >= 3) spec.components.push_back(Avc::bsc_family({w31, w32}));
      spec.mode = CompositeMode::independent;
      spec.constraint = StateConstraint::identical;

      RegionCell cell;
      cell.w11 = w11;
      cell.w12 = w12;
      cell.f_value = symmetrizability_distance(build_composite(spec)).f_value;
      if (w11 >= 0.5 - half_band || std::abs(w12 - 0.5) <= half_band ||
          std::abs(w11 - w12) <= half_band) {
        cell.verdict = CellVerdict::excluded;
      } else {
        cell.verdict = cell.f_value <= tol ? CellVerdict::symmetrizable
                                           : CellVerdict::non_symmetrizable;
      }
      scan.cells.push_back(cell);
    }
  }
  return scan;
}

std::string region_scan_csv(const RegionScan& scan) {
  std::string out;
  out.reserve(scan.cells.size() * 48);
  char buf[128];
  for (const RegionCell& cell : scan.cells) {
    const char* verdict = cell.verdict == CellVerdict::symmetrizable       ? "symmetrizable"
                          : cell.verdict == CellVerdict::non_symmetrizable ? "non-symmetrizable"
                                                                           : "excluded";
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%s\n", cell.w11, cell.w12,
                  cell.f_value, verdict);
    out += buf;
  }
  return out;
}

}  // namespace avck
