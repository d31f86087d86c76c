#include "jamsim.hpp"

#include <cmath>
#include <limits>

namespace avck {

namespace {

constexpr std::uint64_t kResampleCap = 100000;  // per trial

// Small deterministic RNG so reports are bit-identical across platforms.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  std::size_t index(std::size_t n) {
    return std::min<std::size_t>(n - 1, static_cast<std::size_t>(unit() * static_cast<double>(n)));
  }

  // inverse-CDF draw from a distribution given as raw weights summing to ~1
  std::size_t categorical(const ProbVector& p) {
    double u = unit();
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      acc += p[i];
      if (u < acc) return i;
    }
    return p.size() - 1;
  }
};

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  Rng mix(seed ^ (0x632be59bd9b4e019ULL * (trial + 1)));
  return mix.next();
}

std::vector<std::size_t> draw_states(const Avc& avc, const Codebook& code,
                                     const JammerPolicy& policy, std::size_t n, Rng& rng) {
  std::vector<std::size_t> states(n);
  switch (policy.kind) {
    case JammerPolicy::Kind::constant:
      if (policy.constant_state >= avc.num_states())
        throw domain_error("simulate: constant state out of range");
      for (std::size_t i = 0; i < n; ++i) states[i] = policy.constant_state;
      break;
    case JammerPolicy::Kind::iid:
      if (policy.iid_q.size() != avc.num_states())
        throw domain_error("simulate: iid strategy/state dimension mismatch");
      for (std::size_t i = 0; i < n; ++i) states[i] = rng.categorical(policy.iid_q);
      break;
    case JammerPolicy::Kind::symmetrizing: {
      const Channel& u = *policy.symmetrizer;
      std::size_t decoy = rng.index(code.m);
      const std::vector<std::size_t>& x = code.codewords[decoy];
      for (std::size_t i = 0; i < n; ++i) states[i] = rng.categorical(u.column(x[i]));
      break;
    }
  }
  return states;
}

}  // namespace

Codebook random_code(std::size_t n, std::size_t m, const ProbVector& p, std::uint64_t seed) {
  if (n < 1 || m < 1) throw domain_error("random_code: n and M must be positive");
  double log_space = static_cast<double>(n) * std::log2(static_cast<double>(p.size()));
  if (std::log2(static_cast<double>(m)) > log_space + 1e-9)
    throw domain_error("random_code: more messages than length-n sequences");
  Codebook code;
  code.n = n;
  code.m = m;
  code.codewords.resize(m);
  Rng rng(seed);
  for (std::size_t msg = 0; msg < m; ++msg) {
    code.codewords[msg].resize(n);
    for (std::size_t i = 0; i < n; ++i) code.codewords[msg][i] = rng.categorical(p);
  }
  return code;
}

Codebook repetition_code(std::size_t n) {
  Codebook code;
  code.n = n;
  code.m = 2;
  code.codewords = {std::vector<std::size_t>(n, 0), std::vector<std::size_t>(n, 1)};
  return code;
}

std::vector<std::size_t> symmetrizing_attack(const Channel& u, const Codebook& code,
                                             std::uint64_t seed) {
  Rng rng(seed);
  JammerPolicy policy = JammerPolicy::symmetrizing(u);
  // alphabet bookkeeping only; the channel family itself is not consulted
  Avc dummy({make_identity(u.output_size())}, {});
  return draw_states(dummy, code, policy, code.n, rng);
}

SimReport simulate(const Avc& avc, const Codebook& code, const JammerPolicy& policy,
                   DecoderKind decoder, const ProbVector& q_nominal, std::uint64_t trials,
                   std::uint64_t seed) {
  if (trials < 1) throw domain_error("simulate: need at least one trial");
  if (code.m < 1 || code.n < 1) throw domain_error("simulate: empty codebook");
  for (const auto& cw : code.codewords) {
    if (cw.size() != code.n) throw domain_error("simulate: codeword length mismatch");
    for (std::size_t x : cw)
      if (x >= avc.input_size()) throw domain_error("simulate: codeword symbol out of range");
  }
  if (policy.kind == JammerPolicy::Kind::symmetrizing) {
    if (!policy.symmetrizer) throw domain_error("simulate: symmetrizing policy without strategy");
    if (policy.symmetrizer->input_size() != avc.input_size() ||
        policy.symmetrizer->output_size() != avc.num_states())
      throw domain_error("simulate: symmetrizer shape does not match the channel");
  }

  const std::size_t ny = avc.output_size();
  std::size_t branch_bits = 0;
  if (decoder == DecoderKind::min_hamming) {
    if (avc.input_size() != 2)
      throw domain_error("simulate: min-hamming decoding needs binary inputs");
    while ((std::size_t{1} << branch_bits) < ny) ++branch_bits;
    if ((std::size_t{1} << branch_bits) != ny)
      throw domain_error("simulate: min-hamming decoding needs binary branch outputs");
  }

  Channel nominal = effective_channel(avc, q_nominal);
  // log-likelihood table for the nominal channel
  std::vector<double> loglik(ny * avc.input_size());
  for (std::size_t y = 0; y < ny; ++y)
    for (std::size_t x = 0; x < avc.input_size(); ++x) {
      double w = nominal(y, x);
      loglik[y * avc.input_size() + x] =
          w > 0.0 ? std::log(w) : -std::numeric_limits<double>::infinity();
    }

  SimReport report;
  report.trials = trials;
  report.seed = seed;
  report.per_message_error.assign(code.m, 0.0);
  report.per_message_sent.assign(code.m, 0);
  std::vector<std::uint64_t> errors(code.m, 0);

  std::vector<std::size_t> best;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(trial_seed(seed, t));
    std::size_t msg = rng.index(code.m);
    const std::vector<std::size_t>& x = code.codewords[msg];

    std::vector<std::size_t> states = draw_states(avc, code, policy, code.n, rng);
    if (policy.cost) {
      std::uint64_t attempts = 0;
      while (!is_state_seq_admissible(states, *policy.cost)) {
        ++report.admissibility_rejections;
        if (++attempts > kResampleCap)
          throw domain_error("simulate: jammer policy cannot satisfy its cost budget");
        states = draw_states(avc, code, policy, code.n, rng);
      }
    }

    std::vector<std::size_t> y(code.n);
    for (std::size_t i = 0; i < code.n; ++i)
      y[i] = rng.categorical(avc.states[states[i]].column(x[i]));

    // decode
    best.clear();
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t cand = 0; cand < code.m; ++cand) {
      double score = 0.0;
      if (decoder == DecoderKind::max_likelihood) {
        for (std::size_t i = 0; i < code.n; ++i)
          score += loglik[y[i] * avc.input_size() + code.codewords[cand][i]];
      } else {
        for (std::size_t i = 0; i < code.n; ++i) {
          std::size_t bit = code.codewords[cand][i];
          std::size_t out = y[i];
          for (std::size_t b = 0; b < branch_bits; ++b) {
            std::size_t shift = branch_bits - 1 - b;
            if (((out >> shift) & 1u) != bit) score -= 1.0;
          }
        }
      }
      if (score > best_score) {
        best_score = score;
        best.clear();
        best.push_back(cand);
      } else if (score == best_score) {
        best.push_back(cand);
      }
    }
    std::size_t decoded = best.size() == 1 ? best[0] : best[rng.index(best.size())];

    ++report.per_message_sent[msg];
    if (decoded != msg) ++errors[msg];
  }

  double total = 0.0;
  for (std::size_t msg = 0; msg < code.m; ++msg) {
    report.per_message_error[msg] =
        report.per_message_sent[msg] == 0
            ? 0.0
            : static_cast<double>(errors[msg]) / static_cast<double>(report.per_message_sent[msg]);
    total += report.per_message_error[msg];
  }
  report.avg_error = total / static_cast<double>(code.m);
  return report;
}

}  // namespace avck
