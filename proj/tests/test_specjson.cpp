#include <doctest.h>

#include <json.hpp>

#include "specjson.hpp"

using namespace avck;

namespace {

const char* kTripleSpec = R"({
  "components": [
    {"type": "bsc_avc", "w": [0.1, 0.9]},
    {"type": "bsc_avc", "w": [0.2, 0.8]},
    {"type": "bsc_avc", "w": [0.1, 0.85]}
  ],
  "mode": "independent",
  "constraint": "identical",
  "cost": {"lambda": 0.4, "gamma": 0.4}
})";

}  // namespace

TEST_CASE("spec parsing accepts the documented schema") {
  ParsedSpec parsed = parse_spec_json(kTripleSpec);
  CHECK(parsed.composite.components.size() == 3);
  CHECK(parsed.composite.mode == CompositeMode::independent);
  CHECK(parsed.composite.constraint == StateConstraint::identical);
  REQUIRE(parsed.cost.has_value());
  CHECK(parsed.cost->state_budget == 0.4);
  CHECK(parsed.cost->input_budget == 0.4);

  Avc composite = build_composite(parsed.composite);
  CHECK(composite.num_states() == 2);
  CHECK(composite.output_size() == 8);
}

TEST_CASE("spec parsing defaults and errors") {
  CHECK_THROWS_AS(parse_spec_json("not json"), spec_error);
  CHECK_THROWS_AS(parse_spec_json("[1,2]"), spec_error);

  // mode is required
  CHECK_THROWS_AS(
      parse_spec_json(R"({"components": [{"type": "bsc_avc", "w": [0.1, 0.9]}]})"),
      spec_error);

  // constraint defaults to identical
  ParsedSpec p = parse_spec_json(
      R"({"components": [{"type": "bsc_avc", "w": [0.1, 0.9]}], "mode": "orthogonal"})");
  CHECK(p.composite.constraint == StateConstraint::identical);
  CHECK(p.composite.mode == CompositeMode::orthogonal);
  CHECK_FALSE(p.cost.has_value());

  CHECK_THROWS_AS(
      parse_spec_json(R"({"components": [{"type": "avc", "w": [0.1]}], "mode": "independent"})"),
      spec_error);
  CHECK_THROWS_AS(
      parse_spec_json(R"({"components": [{"type": "bsc_avc", "w": [1.5]}], "mode": "independent"})"),
      spec_error);
  CHECK_THROWS_AS(
      parse_spec_json(R"({"components": [], "mode": "independent"})"), spec_error);
  CHECK_THROWS_AS(
      parse_spec_json(
          R"({"components": [{"type": "bsc_avc", "w": [0.1, 0.9]}], "mode": "diagonal"})"),
      spec_error);
  CHECK_THROWS_AS(
      parse_spec_json(
          R"({"components": [{"type": "bsc_avc", "w": [0.1, 0.9]}], "mode": "independent",
              "cost": {"lambda": 0.4}})"),
      spec_error);
}

TEST_CASE("analysis report carries the documented keys") {
  ParsedSpec parsed = parse_spec_json(
      R"({"components": [{"type": "bsc_avc", "w": [0.3, 0.7]}], "mode": "independent"})");
  Avc avc = build_composite(parsed.composite);
  nlohmann::json j = nlohmann::json::parse(analyze_report_json(avc, 1e-9));

  CHECK(j["symmetrizable"].get<bool>());
  CHECK(j["f_value"].get<double>() <= 1e-9);
  CHECK(j["c_d"].get<double>() == 0.0);
  CHECK(j["c_r"].get<double>() <= 1e-9);
  CHECK(j.contains("symmetrizer"));
  CHECK(j["deterministic"]["zero_reason"] == "symmetrizable");
  CHECK(j["cr_assisted"].contains("q_star"));
  CHECK(j["cr_assisted"].contains("gap"));
}

TEST_CASE("superactivation report carries the fixed keys") {
  ParsedSpec parsed = parse_spec_json(kTripleSpec);
  SuperactReport report =
      superactivation_check(parsed.composite.components, parsed.composite.mode,
                            parsed.composite.constraint, std::nullopt);
  nlohmann::json j = nlohmann::json::parse(superact_report_json(report));
  CHECK(j["per_component"].size() == 3);
  CHECK(j.contains("composite"));
  CHECK(j["superactivated"].get<bool>());
  CHECK(j["superactivated_cr"].get<bool>());
  CHECK(j["mode"] == "independent");
  CHECK(j["constrained"].get<bool>() == false);
  for (const auto& comp : j["per_component"]) {
    CHECK(comp.contains("c_d"));
    CHECK(comp.contains("c_r"));
  }
}

TEST_CASE("simulation report serialization") {
  SimReport report;
  report.trials = 10;
  report.avg_error = 0.25;
  report.per_message_error = {0.5, 0.0};
  report.per_message_sent = {5, 5};
  report.seed = 123;
  report.admissibility_rejections = 2;
  nlohmann::json j = nlohmann::json::parse(sim_report_json(report));
  CHECK(j["trials"] == 10);
  CHECK(j["avg_error"] == 0.25);
  CHECK(j["seed"] == 123);
  CHECK(j["admissibility_rejections"] == 2);
  CHECK(j["per_message_error"].size() == 2);
}
