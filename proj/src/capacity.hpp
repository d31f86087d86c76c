#pragma once

#include <optional>
#include <vector>

#include "avc.hpp"
#include "symmetrize.hpp"

namespace avck {

inline constexpr double kZeroCapacityTol = 1e-9;
inline constexpr double kSaddleGapTol = 1e-6;

enum class CapacityKind { deterministic, cr_assisted };

enum class ZeroReason { none, symmetrizable, constraint_criterion, degenerate };

/// Saddle value of the min-max mutual information game between the jammer's
/// state mixture q and the encoder's input distribution p. `gap` certifies
/// the saddle: max_p I(p, W_q*) minus min_q I(p*, W_q).
struct CapacityResult {
  double value = 0.0;  // bits per channel use
  ProbVector q_star;
  ProbVector p_star;
  double gap = 0.0;
  CapacityKind kind = CapacityKind::cr_assisted;
  ZeroReason zero_reason = ZeroReason::none;
};

/// Common-randomness-assisted capacity: min over state mixtures of the
/// mixed channel's capacity. Two-point simplexes are solved by bracketed
/// scalar search, larger ones by multi-start projected gradient.
CapacityResult cr_capacity(const Avc& avc);

/// Deterministic capacity under the dichotomy: zero when the channel is
/// symmetrizable (distance at most `tol`), otherwise equal to the
/// CR-assisted value. The reported saddle point is the CR saddle either way.
CapacityResult deterministic_capacity(const Avc& avc, double tol = kSymmetrizableTol);

/// Minimum jammer cost of symmetrization under input distribution p: the
/// linear cost minimized over the polytope of symmetrizing strategies.
/// Returns +infinity when the channel is not symmetrizable (empty polytope).
double symmetrizing_cost(const Avc& avc, const ProbVector& p, const CostModel& cost);

/// Zero/positive verdict for the deterministic capacity under a jammer state
/// budget and an encoder input budget.
struct ConstrainedVerdict {
  double lambda0_max = 0.0;  // max of symmetrizing_cost over admissible p
  double budget = 0.0;       // the jammer budget it is compared against
  bool positive = false;     // strictly above the budget
  bool boundary = false;     // exactly at the budget (reported non-positive)
};

/// Maximizes symmetrizing_cost over input distributions meeting the input
/// budget and compares against the state budget (strict inequality).
/// Implemented for binary input alphabets (scalar search over the
/// constrained simplex).
ConstrainedVerdict constrained_positivity(const Avc& avc, const CostModel& cost);

struct ComponentCapacities {
  CapacityResult deterministic;
  CapacityResult cr_assisted;
  double f_value = 0.0;
  std::optional<ConstrainedVerdict> constrained;
};

/// Side-by-side capacities of the components and their composite, with the
/// super-activation verdict: all individual values zero (within 1e-9) while
/// the composite value exceeds 1e-6. With a cost model attached the verdict
/// uses the constrained zero/positive criterion instead.
struct SuperactReport {
  std::vector<ComponentCapacities> per_component;
  ComponentCapacities composite;
  bool superactivated = false;     // deterministic capacity (or constrained verdict)
  bool superactivated_cr = false;  // CR-assisted capacity (unconstrained only)
  CompositeMode mode = CompositeMode::independent;
  bool constrained = false;
};

SuperactReport superactivation_check(const std::vector<Avc>& components, CompositeMode mode,
                                     StateConstraint constraint,
                                     const std::optional<CostModel>& cost = std::nullopt);

/// Capacity of a fixed channel: max over input distributions of the mutual
/// information. Exposed for oracle-style checks of the inner maximization.
double channel_capacity(const Channel& w, ProbVector* argmax = nullptr);

}  // namespace avck
