#include "capacity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>

#include "lp.hpp"

namespace avck {

namespace {

constexpr double kScalarTol = 1e-10;   // bracketed search width
constexpr double kGradTol = 1e-10;     // projected-gradient stationarity
constexpr int kMultiStarts = 16;

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

// Golden-section search for the minimum of a unimodal function on [a, b].
// Endpoints are evaluated as well so boundary optima are returned exactly.
double golden_min(const std::function<double(double)>& f, double a, double b,
                  double* best_value) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  double lo = a, hi = b;
  while (hi - lo > kScalarTol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  double xm = 0.5 * (lo + hi);
  double fm = f(xm);
  double fa = f(a), fb = f(b);
  double best_x = xm;
  *best_value = fm;
  if (fa < *best_value) {
    *best_value = fa;
    best_x = a;
  }
  if (fb < *best_value) {
    *best_value = fb;
    best_x = b;
  }
  return best_x;
}

// Euclidean projection onto the probability simplex.
std::vector<double> project_simplex(std::vector<double> v) {
  std::vector<double> sorted = v;
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double cumulative = 0.0, theta = 0.0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    cumulative += sorted[i];
    double candidate = (cumulative - 1.0) / static_cast<double>(i + 1);
    if (sorted[i] - candidate > 0.0) {
      theta = candidate;
      k = i + 1;
    }
  }
  (void)k;
  double sum = 0.0;
  for (double& x : v) {
    x = std::max(0.0, x - theta);
    sum += x;
  }
  for (double& x : v) x /= sum;
  return v;
}

double mi_of(const std::vector<double>& p, const Channel& w) {
  return mutual_information(ProbVector(project_simplex(p)), w);
}

// d I(p; W)/d p(x) up to an additive constant (which the simplex projection
// removes): the divergence of the column w(.|x) from the output law.
std::vector<double> mi_gradient_p(const std::vector<double>& p, const Channel& w) {
  std::size_t nx = w.input_size(), ny = w.output_size();
  std::vector<double> out(ny, 0.0);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) out[y] += p[x] * w(y, x);
  std::vector<double> grad(nx, 0.0);
  for (std::size_t x = 0; x < nx; ++x) {
    double g = 0.0;
    for (std::size_t y = 0; y < ny; ++y) {
      double wyx = w(y, x);
      if (wyx > 0.0) g += wyx * std::log2(wyx / std::max(out[y], 1e-300));
    }
    grad[x] = g;
  }
  return grad;
}

struct InnerResult {
  double value = 0.0;
  ProbVector p;
};

// Raw mutual-information kernel for optimizer loops: no validation, no
// distribution wrapper.
double mi_raw(const std::vector<double>& p, const Channel& w) {
  std::size_t nx = w.input_size(), ny = w.output_size();
  std::vector<double> out(ny, 0.0);
  for (std::size_t x = 0; x < nx; ++x) {
    if (p[x] == 0.0) continue;
    for (std::size_t y = 0; y < ny; ++y) out[y] += p[x] * w(y, x);
  }
  double info = 0.0;
  for (std::size_t x = 0; x < nx; ++x) {
    if (p[x] == 0.0) continue;
    for (std::size_t y = 0; y < ny; ++y) {
      double wyx = w(y, x);
      if (wyx > 0.0) info += p[x] * wyx * std::log2(wyx / out[y]);
    }
  }
  return info > 0.0 ? info : 0.0;
}

// Projected gradient ascent from one start; the objective is concave so any
// stationary point is a global maximum. Stops once a full line search buys
// less than 1e-13 bits.
InnerResult ascend_mi(const Channel& w, std::vector<double> p) {
  p = project_simplex(std::move(p));
  double value = mi_raw(p, w);
  double step = 0.5;
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<double> grad = mi_gradient_p(p, w);
    double gained = 0.0;
    while (step > 1e-12) {
      std::vector<double> trial(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) trial[i] = p[i] + step * grad[i];
      trial = project_simplex(std::move(trial));
      double tv = mi_raw(trial, w);
      if (tv > value + 1e-14) {
        gained = tv - value;
        p = std::move(trial);
        value = tv;
        if (step < 1.0) step *= 2.0;
        break;
      }
      step *= 0.5;
    }
    if (gained < 1e-13) break;
  }
  return {value, ProbVector(p)};
}

InnerResult maximize_mi(const Channel& w, const std::vector<ProbVector>& hints) {
  std::size_t nx = w.input_size();
  if (nx == 1) return {0.0, ProbVector::dirac(0, 1)};

  if (nx == 2) {
    auto neg = [&](double t) {
      return -mutual_information(ProbVector({1.0 - t, t}), w);
    };
    double best_value = 0.0;
    double t = golden_min(neg, 0.0, 1.0, &best_value);
    return {-best_value, ProbVector({1.0 - t, t})};
  }

  std::vector<std::vector<double>> starts;
  starts.push_back(std::vector<double>(nx, 1.0 / static_cast<double>(nx)));
  for (const ProbVector& h : hints) {
    if (h.size() == nx) starts.push_back(h.entries());
  }
  for (std::size_t x = 0; x < nx && starts.size() < 8; ++x) {
    std::vector<double> corner(nx, 0.05 / static_cast<double>(nx - 1));
    corner[x] = 0.95;
    double s = std::accumulate(corner.begin(), corner.end(), 0.0);
    for (double& v : corner) v /= s;
    starts.push_back(std::move(corner));
  }
  uint64_t rng = 0x5eedc0defeedULL;
  while (starts.size() < static_cast<std::size_t>(kMultiStarts)) {
    std::vector<double> r(nx);
    for (double& v : r) v = -std::log(std::max(uniform01(rng), 1e-12));
    double s = std::accumulate(r.begin(), r.end(), 0.0);
    for (double& v : r) v /= s;
    starts.push_back(std::move(r));
  }

  InnerResult best;
  bool first = true;
  for (auto& start : starts) {
    InnerResult candidate = ascend_mi(w, start);
    if (first || candidate.value > best.value + 1e-12 ||
        (std::abs(candidate.value - best.value) <= 1e-12 &&
         candidate.p[0] < best.p[0])) {
      best = std::move(candidate);
      first = false;
    }
  }
  return best;
}

// d I(p; W_q)/d q(s) by Danskin-style differentiation through the mixture.
std::vector<double> mi_gradient_q(const Avc& avc, const ProbVector& p,
                                  const std::vector<double>& q) {
  std::size_t nx = avc.input_size(), ny = avc.output_size(), ns = avc.num_states();
  std::vector<double> wq(nx * ny, 0.0);
  for (std::size_t s = 0; s < ns; ++s)
    for (std::size_t y = 0; y < ny; ++y)
      for (std::size_t x = 0; x < nx; ++x)
        wq[y * nx + x] += q[s] * avc.states[s](y, x);
  std::vector<double> out(ny, 0.0);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) out[y] += p[x] * wq[y * nx + x];
  std::vector<double> grad(ns, 0.0);
  for (std::size_t s = 0; s < ns; ++s) {
    double g = 0.0;
    for (std::size_t x = 0; x < nx; ++x) {
      if (p[x] == 0.0) continue;
      for (std::size_t y = 0; y < ny; ++y) {
        double ws = avc.states[s](y, x);
        if (ws == 0.0) continue;
        double ratio = wq[y * nx + x] / std::max(out[y], 1e-300);
        g += p[x] * ws * std::log2(std::max(ratio, 1e-300));
      }
    }
    grad[s] = g;
  }
  return grad;
}

// min over q of I(p; W_q) for fixed p (smooth convex in q).
double minimize_mi_over_q(const Avc& avc, const ProbVector& p, ProbVector* argmin) {
  std::size_t ns = avc.num_states();
  if (ns == 1) {
    if (argmin) *argmin = ProbVector::dirac(0, 1);
    return mutual_information(p, avc.states[0]);
  }
  if (ns == 2) {
    auto f = [&](double t) {
      return mutual_information(p, effective_channel(avc, ProbVector({1.0 - t, t})));
    };
    double best = 0.0;
    double t = golden_min(f, 0.0, 1.0, &best);
    if (argmin) *argmin = ProbVector({1.0 - t, t});
    return best;
  }
  std::vector<double> q(ns, 1.0 / static_cast<double>(ns));
  double value = mutual_information(p, effective_channel(avc, ProbVector(q)));
  double step = 0.5;
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<double> grad = mi_gradient_q(avc, p, q);
    double gained = 0.0;
    while (step > 1e-12) {
      std::vector<double> trial(ns);
      for (std::size_t s = 0; s < ns; ++s) trial[s] = q[s] - step * grad[s];
      trial = project_simplex(std::move(trial));
      double tv = mutual_information(p, effective_channel(avc, ProbVector(trial)));
      if (tv < value - 1e-14) {
        gained = value - tv;
        q = std::move(trial);
        value = tv;
        if (step < 1.0) step *= 2.0;
        break;
      }
      step *= 0.5;
    }
    if (gained < 1e-13) break;
  }
  if (argmin) *argmin = ProbVector(q);
  return value;
}

}  // namespace

double channel_capacity(const Channel& w, ProbVector* argmax) {
  InnerResult r = maximize_mi(w, {});
  if (argmax) *argmax = r.p;
  return r.value;
}

CapacityResult cr_capacity(const Avc& avc) {
  const std::size_t ns = avc.num_states();
  CapacityResult result;
  result.kind = CapacityKind::cr_assisted;

  ProbVector q_star;
  if (ns == 1) {
    q_star = ProbVector::dirac(0, 1);
  } else if (ns == 2) {
    auto phi = [&](double t) {
      return maximize_mi(effective_channel(avc, ProbVector({1.0 - t, t})), {}).value;
    };
    double best = 0.0;
    double t = golden_min(phi, 0.0, 1.0, &best);
    q_star = ProbVector({1.0 - t, t});
  } else {
    // multi-start projected subgradient on the convex outer objective
    uint64_t rng = 0xa5a5d1cecafeULL;
    std::vector<std::vector<double>> starts;
    starts.push_back(std::vector<double>(ns, 1.0 / static_cast<double>(ns)));
    for (std::size_t s = 0; s < ns && starts.size() < 8; ++s) {
      std::vector<double> corner(ns, 0.05 / static_cast<double>(ns - 1));
      corner[s] = 0.95;
      starts.push_back(project_simplex(std::move(corner)));
    }
    while (starts.size() < static_cast<std::size_t>(kMultiStarts)) {
      std::vector<double> r(ns);
      for (double& v : r) v = -std::log(std::max(uniform01(rng), 1e-12));
      starts.push_back(project_simplex(std::move(r)));
    }
    std::vector<double> best_q;
    double best_value = std::numeric_limits<double>::infinity();
    for (auto& q0 : starts) {
      std::vector<double> q = q0;
      InnerResult inner = maximize_mi(effective_channel(avc, ProbVector(q)), {});
      double value = inner.value;
      double step = 0.5;
      for (int iter = 0; iter < 600; ++iter) {
        std::vector<double> grad = mi_gradient_q(avc, inner.p, q);
        double gained = 0.0;
        while (step > 1e-12) {
          std::vector<double> trial(ns);
          for (std::size_t s = 0; s < ns; ++s) trial[s] = q[s] - step * grad[s];
          trial = project_simplex(std::move(trial));
          InnerResult ti = maximize_mi(effective_channel(avc, ProbVector(trial)), {inner.p});
          if (ti.value < value - 1e-14) {
            gained = value - ti.value;
            q = std::move(trial);
            value = ti.value;
            inner = std::move(ti);
            if (step < 4.0) step *= 2.0;
            break;
          }
          step *= 0.5;
        }
        if (gained < 1e-13) break;
      }
      if (value < best_value - 1e-12 ||
          (std::abs(value - best_value) <= 1e-12 && (best_q.empty() || q[0] < best_q[0]))) {
        best_value = value;
        best_q = q;
      }
    }
    q_star = ProbVector(project_simplex(best_q));
  }

  InnerResult inner = maximize_mi(effective_channel(avc, q_star), {});
  result.value = inner.value;
  result.q_star = q_star;
  result.p_star = inner.p;
  double lower = minimize_mi_over_q(avc, inner.p, nullptr);
  result.gap = inner.value - lower;
  return result;
}

namespace {

// Dichotomy wiring: the deterministic value is zero for symmetrizable
// channels and the CR-assisted value otherwise.
CapacityResult apply_dichotomy(CapacityResult cr, const Avc& avc, double tol) {
  cr.kind = CapacityKind::deterministic;
  if (avc.input_size() < 2) {
    // one input symbol carries no information
    cr.value = 0.0;
    cr.zero_reason = ZeroReason::degenerate;
    return cr;
  }
  if (symmetrizability_distance(avc).f_value <= tol) {
    cr.value = 0.0;
    cr.zero_reason = ZeroReason::symmetrizable;
    return cr;
  }
  if (cr.value <= kZeroCapacityTol) cr.zero_reason = ZeroReason::degenerate;
  return cr;
}

}  // namespace

CapacityResult deterministic_capacity(const Avc& avc, double tol) {
  return apply_dichotomy(cr_capacity(avc), avc, tol);
}

double symmetrizing_cost(const Avc& avc, const ProbVector& p, const CostModel& cost) {
  const std::size_t nx = avc.input_size();
  const std::size_t ny = avc.output_size();
  const std::size_t ns = avc.num_states();
  if (p.size() != nx)
    throw domain_error("symmetrizing_cost: distribution/input dimension mismatch");
  if (cost.state_cost.size() < ns)
    throw domain_error("symmetrizing_cost: cost model does not cover the state set");
  if (nx < 2) throw domain_error("symmetrizing_cost: needs at least two input symbols");

  LpProblem lp;
  lp.num_vars = nx * ns;
  lp.objective.assign(lp.num_vars, 0.0);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t s = 0; s < ns; ++s)
      lp.objective[x * ns + s] = p[x] * cost.state_cost[s];

  for (std::size_t x = 0; x < nx; ++x) {
    std::vector<double> row(lp.num_vars, 0.0);
    for (std::size_t s = 0; s < ns; ++s) row[x * ns + s] = 1.0;
    lp.eq_rows.push_back(std::move(row));
    lp.eq_rhs.push_back(1.0);
  }
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t xp = x + 1; xp < nx; ++xp)
      for (std::size_t y = 0; y < ny; ++y) {
        std::vector<double> row(lp.num_vars, 0.0);
        for (std::size_t s = 0; s < ns; ++s) {
          row[x * ns + s] += avc.states[s](y, xp);
          row[xp * ns + s] -= avc.states[s](y, x);
        }
        lp.eq_rows.push_back(std::move(row));
        lp.eq_rhs.push_back(0.0);
      }

  LpSolution sol = solve_lp(lp);
  if (sol.status == LpStatus::infeasible)
    return std::numeric_limits<double>::infinity();
  if (sol.status != LpStatus::optimal)
    throw numeric_error("symmetrizing_cost: LP did not reach an optimum");
  return std::max(0.0, sol.objective);
}

ConstrainedVerdict constrained_positivity(const Avc& avc, const CostModel& cost) {
  if (avc.input_size() != 2)
    throw domain_error("constrained_positivity: implemented for binary input alphabets");
  if (cost.input_cost.size() < 2)
    throw domain_error("constrained_positivity: cost model does not cover the input alphabet");

  ConstrainedVerdict verdict;
  verdict.budget = cost.state_budget;

  // admissible interval for t = p(1) under the average input budget
  const double g0 = cost.input_cost[0], g1 = cost.input_cost[1];
  double t_lo = 0.0, t_hi = 1.0;
  if (g0 == g1) {
    if (g0 > cost.input_budget)
      throw domain_error("constrained_positivity: no admissible input distribution");
  } else {
    double boundary = (cost.input_budget - g0) / (g1 - g0);
    if (g1 > g0)
      t_hi = std::min(1.0, boundary);
    else
      t_lo = std::max(0.0, boundary);
    if (t_lo > t_hi + 1e-15)
      throw domain_error("constrained_positivity: no admissible input distribution");
    t_hi = std::max(t_lo, t_hi);
  }

  // feasibility of the symmetrizer polytope does not depend on p
  double probe = symmetrizing_cost(avc, ProbVector::uniform(2), cost);
  if (std::isinf(probe)) {
    verdict.lambda0_max = probe;
    verdict.positive = true;
    return verdict;
  }

  auto neg_cost = [&](double t) {
    return -symmetrizing_cost(avc, ProbVector({1.0 - t, t}), cost);
  };
  double best = 0.0;
  golden_min(neg_cost, t_lo, t_hi, &best);
  verdict.lambda0_max = -best;
  verdict.boundary = std::abs(verdict.lambda0_max - verdict.budget) <= kZeroCapacityTol;
  verdict.positive = !verdict.boundary && verdict.lambda0_max > verdict.budget;
  return verdict;
}

SuperactReport superactivation_check(const std::vector<Avc>& components, CompositeMode mode,
                                     StateConstraint constraint,
                                     const std::optional<CostModel>& cost) {
  if (components.size() < 2)
    throw domain_error("superactivation_check: needs at least two components");

  SuperactReport report;
  report.mode = mode;
  report.constrained = cost.has_value();

  auto analyze = [&](const Avc& avc) {
    ComponentCapacities c;
    c.cr_assisted = cr_capacity(avc);
    c.deterministic = apply_dichotomy(c.cr_assisted, avc, kSymmetrizableTol);
    c.f_value = avc.input_size() >= 2 ? symmetrizability_distance(avc).f_value
                                      : std::numeric_limits<double>::quiet_NaN();
    if (cost) c.constrained = constrained_positivity(avc, *cost);
    return c;
  };

  for (const Avc& comp : components) report.per_component.push_back(analyze(comp));

  CompositeSpec spec;
  spec.components = components;
  spec.mode = mode;
  spec.constraint = constraint;
  report.composite = analyze(build_composite(spec));

  bool all_zero_d = true, all_zero_r = true, none_positive = true;
  for (const ComponentCapacities& c : report.per_component) {
    if (c.deterministic.value > kZeroCapacityTol) all_zero_d = false;
    if (c.cr_assisted.value > kZeroCapacityTol) all_zero_r = false;
    if (c.constrained && c.constrained->positive) none_positive = false;
  }
  report.superactivated_cr =
      all_zero_r && report.composite.cr_assisted.value > kSaddleGapTol;
  if (cost) {
    report.superactivated =
        none_positive && report.composite.constrained && report.composite.constrained->positive;
  } else {
    report.superactivated =
        all_zero_d && report.composite.deterministic.value > kSaddleGapTol;
  }
  return report;
}

}  // namespace avck
