#pragma once

#include <optional>
#include <string>

#include "avc.hpp"
#include "capacity.hpp"
#include "jamsim.hpp"
#include "symmetrize.hpp"

// External JSON surfaces: the channel-spec schema consumed by the CLI and the
// fixed-key report documents it emits. Field names are part of the interface.

namespace avck {

struct ParsedSpec {
  CompositeSpec composite;
  std::optional<CostModel> cost;
};

/// Parses a channel spec document:
///   {"components": [{"type": "bsc_avc", "w": [w1, w2]}, ...],
///    "mode": "independent" | "orthogonal",
///    "constraint": "identical" | "unconstrained",          (default identical)
///    "cost": {"lambda": L, "gamma": G}}                    (optional)
/// Throws spec_error on any malformed or missing field.
ParsedSpec parse_spec_json(const std::string& text);

/// Full per-composite analysis: symmetrizability verdict, distance value,
/// attaining strategy, and both capacities with their saddle certificates.
std::string analyze_report_json(const Avc& avc, double tol);

/// Capacity-only report (deterministic and CR-assisted with saddle data).
std::string capacity_report_json(const Avc& avc);

/// Fixed-key super-activation report:
///   {"per_component": [...], "composite": {...}, "superactivated": bool,
///    "superactivated_cr": bool, "mode": str, "constrained": bool}
std::string superact_report_json(const SuperactReport& report);

std::string sim_report_json(const SimReport& report);

}  // namespace avck
