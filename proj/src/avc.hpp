#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "channel.hpp"

namespace avck {

/// An arbitrarily varying channel: a finite family of channels over common
/// alphabets, indexed by the jammer's state set.
struct Avc {
  std::vector<Channel> states;
  std::vector<std::string> state_labels;

  Avc() = default;
  Avc(std::vector<Channel> s, std::vector<std::string> labels);

  /// AVC whose states are BSCs with the given parameters; labels "1", "2", ...
  static Avc bsc_family(const std::vector<double>& params);

  std::size_t num_states() const { return states.size(); }
  std::size_t input_size() const { return states.front().input_size(); }
  std::size_t output_size() const { return states.front().output_size(); }
};

enum class CompositeMode {
  orthogonal,   // per-branch input tuples (x_1, ..., x_K)
  independent,  // one shared input symbol repeated on every branch
};

enum class StateConstraint {
  unconstrained,  // jammer picks a state per branch
  identical,      // one state drives all branches simultaneously
  subset,         // explicit list of admissible state tuples
};

/// Recipe for combining K component AVCs into one composite AVC.
struct CompositeSpec {
  std::vector<Avc> components;
  CompositeMode mode = CompositeMode::independent;
  StateConstraint constraint = StateConstraint::identical;
  std::vector<std::vector<std::size_t>> subset_tuples;  // used iff constraint == subset
};

/// Per-symbol cost functions and budgets for the jammer (state side) and the
/// encoder (input side). Defaults for the binary/two-state case: state costs
/// 0 and 1, input costs 0 and 1.
struct CostModel {
  std::vector<double> state_cost;
  double state_budget = 0.0;  // Lambda
  std::vector<double> input_cost;
  double input_budget = 0.0;  // Gamma

  static CostModel binary_default(double lambda, double gamma) {
    return CostModel{{0.0, 1.0}, lambda, {0.0, 1.0}, gamma};
  }
};

/// Flattens a composite recipe into a single AVC. The state set is the
/// constrained set of state tuples (lexicographic order, first component
/// major); each state's channel is the Kronecker product of the component
/// channels. In independent mode every branch sees the same input symbol,
/// i.e. the orthogonal product restricted to its diagonal input columns.
Avc build_composite(const CompositeSpec& spec);

/// Channel seen under a mixed jammer strategy: sum_s q(s) W_s.
Channel effective_channel(const Avc& avc, const ProbVector& q);

/// Whether a state sequence (0-based indices) meets the average state budget.
bool is_state_seq_admissible(const std::vector<std::size_t>& seq, const CostModel& cost);

/// Whether an input sequence (0-based indices) meets the average input budget.
bool is_input_seq_admissible(const std::vector<std::size_t>& seq, const CostModel& cost);

/// Lifts a single-state strategy q to the K-fold product state space: the
/// distribution placing q(s) on the diagonal tuple (s, ..., s).
ProbVector lift_diagonal(const ProbVector& q, std::size_t k);

}  // namespace avck
