#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "avc.hpp"

namespace avck {

/// A deterministic block code: M codewords of length n over the input
/// alphabet (stored as 0-based symbol indices).
struct Codebook {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::vector<std::size_t>> codewords;
};

/// Codewords drawn i.i.d. from `p`, reproducible from `seed`. Requires
/// M <= |X|^n so distinct messages are representable at all.
Codebook random_code(std::size_t n, std::size_t m, const ProbVector& p, std::uint64_t seed);

/// The two-codeword repetition code {(0,...,0), (1,...,1)}.
Codebook repetition_code(std::size_t n);

struct JammerPolicy {
  enum class Kind { constant, iid, symmetrizing };
  Kind kind = Kind::constant;
  std::size_t constant_state = 0;       // constant: this state every use
  ProbVector iid_q;                     // iid: states drawn i.i.d. from q
  std::optional<Channel> symmetrizer;   // symmetrizing: U from inputs to states
  std::optional<CostModel> cost;        // admissibility filter (resampling)

  static JammerPolicy constant(std::size_t state) {
    JammerPolicy p;
    p.kind = Kind::constant;
    p.constant_state = state;
    return p;
  }
  static JammerPolicy iid(ProbVector q) {
    JammerPolicy p;
    p.kind = Kind::iid;
    p.iid_q = std::move(q);
    return p;
  }
  static JammerPolicy symmetrizing(Channel u) {
    JammerPolicy p;
    p.kind = Kind::symmetrizing;
    p.symmetrizer = std::move(u);
    return p;
  }
};

enum class DecoderKind {
  max_likelihood,  // against the nominal mixed channel
  min_hamming,     // bitwise disagreement, binary branches only
};

struct SimReport {
  std::uint64_t trials = 0;
  double avg_error = 0.0;                 // mean of the per-message error rates
  std::vector<double> per_message_error;  // rate per message (0 when never sent)
  std::vector<std::uint64_t> per_message_sent;
  std::uint64_t seed = 0;
  std::uint64_t admissibility_rejections = 0;
};

/// Samples a state sequence for one trial of the symmetrizing attack: a
/// uniformly random decoy message is drawn and states follow u(.|x) along the
/// decoy codeword.
std::vector<std::size_t> symmetrizing_attack(const Channel& u, const Codebook& code,
                                             std::uint64_t seed);

/// Monte Carlo estimate of the average decoding error under a jammer policy.
/// A uniformly random message is sent each trial; state sequences violating
/// the attached cost model are resampled (counted). Identical inputs and seed
/// give a bit-identical report. `q_nominal` is the state mixture the
/// max-likelihood decoder assumes.
SimReport simulate(const Avc& avc, const Codebook& code, const JammerPolicy& policy,
                   DecoderKind decoder, const ProbVector& q_nominal, std::uint64_t trials,
                   std::uint64_t seed);

}  // namespace avck
