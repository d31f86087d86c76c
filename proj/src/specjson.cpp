#include "specjson.hpp"

#include <cmath>

#include <json.hpp>

namespace avck {

namespace {

using ordered_json = nlohmann::ordered_json;

// Bound non-finite values into JSON-representable tokens.
ordered_json num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return nullptr;
  return v;
}

ordered_json prob_vector(const ProbVector& p) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < p.size(); ++i) arr.push_back(p[i]);
  return arr;
}

ordered_json channel_matrix(const Channel& c) {
  ordered_json rows = ordered_json::array();
  for (std::size_t y = 0; y < c.output_size(); ++y) {
    ordered_json row = ordered_json::array();
    for (std::size_t x = 0; x < c.input_size(); ++x) row.push_back(c(y, x));
    rows.push_back(row);
  }
  return rows;
}

ordered_json capacity_json(const CapacityResult& r) {
  ordered_json j;
  j["value"] = num(r.value);
  j["q_star"] = prob_vector(r.q_star);
  j["p_star"] = prob_vector(r.p_star);
  j["gap"] = num(r.gap);
  switch (r.zero_reason) {
    case ZeroReason::none:
      break;
    case ZeroReason::symmetrizable:
      j["zero_reason"] = "symmetrizable";
      break;
    case ZeroReason::constraint_criterion:
      j["zero_reason"] = "constraint-criterion";
      break;
    case ZeroReason::degenerate:
      j["zero_reason"] = "degenerate";
      break;
  }
  return j;
}

ordered_json constrained_json(const ConstrainedVerdict& v) {
  ordered_json j;
  j["lambda0_max"] = num(v.lambda0_max);
  j["budget"] = num(v.budget);
  j["positive"] = v.positive;
  if (v.boundary) j["boundary"] = true;
  return j;
}

ordered_json component_json(const ComponentCapacities& c) {
  ordered_json j;
  j["c_d"] = num(c.deterministic.value);
  j["c_r"] = num(c.cr_assisted.value);
  j["f_value"] = num(c.f_value);
  j["deterministic"] = capacity_json(c.deterministic);
  j["cr_assisted"] = capacity_json(c.cr_assisted);
  if (c.constrained) j["constrained"] = constrained_json(*c.constrained);
  return j;
}

double require_param(const nlohmann::json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number())
    throw spec_error(std::string("spec: missing numeric field \"") + field + "\"");
  return j[field].get<double>();
}

}  // namespace

ParsedSpec parse_spec_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw spec_error(std::string("spec: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw spec_error("spec: top level must be an object");

  ParsedSpec parsed;

  if (!doc.contains("mode") || !doc["mode"].is_string())
    throw spec_error("spec: missing required field \"mode\"");
  std::string mode = doc["mode"].get<std::string>();
  if (mode == "independent")
    parsed.composite.mode = CompositeMode::independent;
  else if (mode == "orthogonal")
    parsed.composite.mode = CompositeMode::orthogonal;
  else
    throw spec_error("spec: mode must be \"independent\" or \"orthogonal\"");

  std::string constraint = "identical";
  if (doc.contains("constraint")) {
    if (!doc["constraint"].is_string()) throw spec_error("spec: constraint must be a string");
    constraint = doc["constraint"].get<std::string>();
  }
  if (constraint == "identical")
    parsed.composite.constraint = StateConstraint::identical;
  else if (constraint == "unconstrained")
    parsed.composite.constraint = StateConstraint::unconstrained;
  else
    throw spec_error("spec: constraint must be \"identical\" or \"unconstrained\"");

  if (!doc.contains("components") || !doc["components"].is_array() || doc["components"].empty())
    throw spec_error("spec: missing non-empty \"components\" array");
  for (const auto& comp : doc["components"]) {
    if (!comp.is_object() || !comp.contains("type") || !comp["type"].is_string())
      throw spec_error("spec: every component needs a \"type\"");
    std::string type = comp["type"].get<std::string>();
    if (type != "bsc_avc")
      throw spec_error("spec: unknown component type \"" + type + "\"");
    if (!comp.contains("w") || !comp["w"].is_array() || comp["w"].empty())
      throw spec_error("spec: bsc_avc component needs a non-empty \"w\" array");
    std::vector<double> params;
    for (const auto& v : comp["w"]) {
      if (!v.is_number()) throw spec_error("spec: \"w\" entries must be numbers");
      double w = v.get<double>();
      if (!(w >= 0.0 && w <= 1.0))
        throw spec_error("spec: BSC parameter outside [0,1]: " + std::to_string(w));
      params.push_back(w);
    }
    parsed.composite.components.push_back(Avc::bsc_family(params));
  }

  if (doc.contains("cost")) {
    if (!doc["cost"].is_object()) throw spec_error("spec: cost must be an object");
    double lambda = require_param(doc["cost"], "lambda");
    double gamma = require_param(doc["cost"], "gamma");
    if (lambda < 0.0 || gamma < 0.0) throw spec_error("spec: budgets must be nonnegative");
    parsed.cost = CostModel::binary_default(lambda, gamma);
  }
  return parsed;
}

std::string analyze_report_json(const Avc& avc, double tol) {
  SymmetrizerResult sym = is_symmetrizable(avc, tol);
  CapacityResult det = deterministic_capacity(avc, tol);
  CapacityResult cr = cr_capacity(avc);

  ordered_json j;
  j["inputs"] = avc.input_size();
  j["outputs"] = avc.output_size();
  j["states"] = avc.num_states();
  j["state_labels"] = avc.state_labels;
  j["symmetrizable"] = sym.feasible;
  j["f_value"] = num(sym.f_value);
  j["residual"] = num(sym.residual);
  if (sym.u) j["symmetrizer"] = channel_matrix(*sym.u);
  j["c_d"] = num(det.value);
  j["c_r"] = num(cr.value);
  j["deterministic"] = capacity_json(det);
  j["cr_assisted"] = capacity_json(cr);
  return j.dump(2) + "\n";
}

std::string capacity_report_json(const Avc& avc) {
  CapacityResult det = deterministic_capacity(avc);
  CapacityResult cr = cr_capacity(avc);
  ordered_json j;
  j["c_d"] = num(det.value);
  j["c_r"] = num(cr.value);
  j["deterministic"] = capacity_json(det);
  j["cr_assisted"] = capacity_json(cr);
  return j.dump(2) + "\n";
}

std::string superact_report_json(const SuperactReport& report) {
  ordered_json j;
  j["per_component"] = ordered_json::array();
  for (const ComponentCapacities& c : report.per_component)
    j["per_component"].push_back(component_json(c));
  j["composite"] = component_json(report.composite);
  j["superactivated"] = report.superactivated;
  j["superactivated_cr"] = report.superactivated_cr;
  j["mode"] = report.mode == CompositeMode::independent ? "independent" : "orthogonal";
  j["constrained"] = report.constrained;
  return j.dump(2) + "\n";
}

std::string sim_report_json(const SimReport& report) {
  ordered_json j;
  j["trials"] = report.trials;
  j["avg_error"] = report.avg_error;
  j["per_message_error"] = report.per_message_error;
  j["per_message_sent"] = report.per_message_sent;
  j["seed"] = report.seed;
  j["admissibility_rejections"] = report.admissibility_rejections;
  return j.dump(2) + "\n";
}

}  // namespace avck
