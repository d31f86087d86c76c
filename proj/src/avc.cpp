#include "avc.hpp"

#include <cmath>
#include <string>

namespace avck {

namespace {

// Enumerates state tuples in lexicographic order, first component major.
std::vector<std::vector<std::size_t>> product_tuples(const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> cur(sizes.size(), 0);
  while (true) {
    tuples.push_back(cur);
    std::size_t i = sizes.size();
    while (i > 0) {
      --i;
      if (++cur[i] < sizes[i]) break;
      cur[i] = 0;
      if (i == 0) return tuples;
    }
  }
}

std::string tuple_label(const CompositeSpec& spec, const std::vector<std::size_t>& tuple) {
  std::string label = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) label += ",";
    label += spec.components[i].state_labels[tuple[i]];
  }
  return label + ")";
}

}  // namespace

Avc::Avc(std::vector<Channel> s, std::vector<std::string> labels)
    : states(std::move(s)), state_labels(std::move(labels)) {
  if (states.empty()) throw domain_error("Avc: at least one state required");
  if (state_labels.empty()) {
    for (std::size_t i = 0; i < states.size(); ++i)
      state_labels.push_back(std::to_string(i + 1));
  }
  if (state_labels.size() != states.size())
    throw domain_error("Avc: label/state count mismatch");
  for (const Channel& c : states) {
    if (c.input_size() != states.front().input_size() ||
        c.output_size() != states.front().output_size())
      throw domain_error("Avc: states must share input/output alphabets");
  }
}

Avc Avc::bsc_family(const std::vector<double>& params) {
  std::vector<Channel> states;
  states.reserve(params.size());
  for (double w : params) states.push_back(make_bsc(w));
  return Avc(std::move(states), {});
}

Avc build_composite(const CompositeSpec& spec) {
  if (spec.components.empty()) throw domain_error("build_composite: no components");
  const std::size_t k = spec.components.size();

  if (spec.mode == CompositeMode::independent) {
    for (const Avc& c : spec.components)
      if (c.input_size() != spec.components.front().input_size())
        throw domain_error("build_composite: independent mode requires a shared input alphabet");
  }

  // admissible state tuples
  std::vector<std::vector<std::size_t>> tuples;
  switch (spec.constraint) {
    case StateConstraint::unconstrained: {
      std::vector<std::size_t> sizes;
      for (const Avc& c : spec.components) sizes.push_back(c.num_states());
      tuples = product_tuples(sizes);
      break;
    }
    case StateConstraint::identical: {
      std::size_t n = spec.components.front().num_states();
      for (const Avc& c : spec.components)
        if (c.num_states() != n)
          throw domain_error("build_composite: identical constraint requires a shared state set");
      for (std::size_t s = 0; s < n; ++s)
        tuples.push_back(std::vector<std::size_t>(k, s));
      break;
    }
    case StateConstraint::subset: {
      if (spec.subset_tuples.empty())
        throw domain_error("build_composite: subset constraint with no tuples");
      for (const auto& t : spec.subset_tuples) {
        if (t.size() != k)
          throw domain_error("build_composite: subset tuple arity mismatch");
        for (std::size_t i = 0; i < k; ++i)
          if (t[i] >= spec.components[i].num_states())
            throw domain_error("build_composite: subset tuple state out of range");
      }
      tuples = spec.subset_tuples;
      break;
    }
  }

  if (k == 1 && spec.constraint != StateConstraint::subset) return spec.components.front();

  std::vector<Channel> states;
  std::vector<std::string> labels;
  states.reserve(tuples.size());
  for (const auto& tuple : tuples) {
    Channel prod = spec.components[0].states[tuple[0]];
    for (std::size_t i = 1; i < k; ++i)
      prod = tensor(prod, spec.components[i].states[tuple[i]]);

    if (spec.mode == CompositeMode::independent && k > 1) {
      // restrict to the diagonal input columns (x, x, ..., x)
      std::size_t in = spec.components.front().input_size();
      std::size_t out = prod.output_size();
      std::vector<double> m(in * out);
      for (std::size_t x = 0; x < in; ++x) {
        std::size_t col = 0;  // lexicographic index of the tuple (x, ..., x)
        for (std::size_t i = 0; i < k; ++i) col = col * in + x;
        for (std::size_t y = 0; y < out; ++y) m[y * in + x] = prod(y, col);
      }
      prod = Channel(in, out, std::move(m));
    }
    states.push_back(std::move(prod));
    labels.push_back(tuple_label(spec, tuple));
  }
  return Avc(std::move(states), std::move(labels));
}

Channel effective_channel(const Avc& avc, const ProbVector& q) {
  if (q.size() != avc.num_states())
    throw domain_error("effective_channel: strategy/state dimension mismatch");
  std::size_t in = avc.input_size(), out = avc.output_size();
  std::vector<double> m(in * out, 0.0);
  for (std::size_t s = 0; s < avc.num_states(); ++s) {
    double qs = q[s];
    if (qs == 0.0) continue;
    const Channel& w = avc.states[s];
    for (std::size_t y = 0; y < out; ++y)
      for (std::size_t x = 0; x < in; ++x) m[y * in + x] += qs * w(y, x);
  }
  for (double& v : m) v = std::min(1.0, std::max(0.0, v));
  return Channel(in, out, std::move(m));
}

bool is_state_seq_admissible(const std::vector<std::size_t>& seq, const CostModel& cost) {
  double total = 0.0;
  for (std::size_t s : seq) {
    if (s >= cost.state_cost.size())
      throw domain_error("is_state_seq_admissible: unknown state label");
    total += cost.state_cost[s];
  }
  return total <= cost.state_budget * static_cast<double>(seq.size());
}

bool is_input_seq_admissible(const std::vector<std::size_t>& seq, const CostModel& cost) {
  double total = 0.0;
  for (std::size_t x : seq) {
    if (x >= cost.input_cost.size())
      throw domain_error("is_input_seq_admissible: unknown input symbol");
    total += cost.input_cost[x];
  }
  return total <= cost.input_budget * static_cast<double>(seq.size());
}

ProbVector lift_diagonal(const ProbVector& q, std::size_t k) {
  if (k < 1) throw domain_error("lift_diagonal: k must be at least 1");
  std::size_t n = q.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > 100000000 / n)
      throw domain_error("lift_diagonal: product state space too large");
    total *= n;
  }
  std::vector<double> lifted(total, 0.0);
  // diagonal tuple (s,...,s) has lexicographic index s * (n^k - 1) / (n - 1)
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * n + s;
    lifted[idx] = q[s];
  }
  return ProbVector(std::move(lifted));
}

}  // namespace avck
