#include "avckit.h"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "avc.hpp"
#include "capacity.hpp"
#include "errors.hpp"
#include "jamsim.hpp"
#include "specjson.hpp"
#include "symmetrize.hpp"

struct avck_avc {
  avck::Avc value;
};

namespace {

thread_local std::string g_last_error;

avck_status fail(avck_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Runs `body`, translating the library's exception taxonomy to status codes.
template <typename Fn>
avck_status guarded(Fn&& body) {
  try {
    return body();
  } catch (const avck::spec_error& e) {
    return fail(AVCK_ERR_PARSE, e.what());
  } catch (const avck::domain_error& e) {
    return fail(AVCK_ERR_INVALID_ARGUMENT, e.what());
  } catch (const avck::numeric_error& e) {
    return fail(AVCK_ERR_NUMERIC, e.what());
  } catch (const std::bad_alloc&) {
    return fail(AVCK_ERR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(AVCK_ERR_NUMERIC, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

avck::ParsedSpec parse_with_override(const char* spec_json, const char* mode_override) {
  if (spec_json == nullptr) throw avck::domain_error("spec text is null");
  avck::ParsedSpec parsed = avck::parse_spec_json(spec_json);
  if (mode_override != nullptr) {
    std::string mode = mode_override;
    if (mode == "independent")
      parsed.composite.mode = avck::CompositeMode::independent;
    else if (mode == "orthogonal")
      parsed.composite.mode = avck::CompositeMode::orthogonal;
    else
      throw avck::spec_error("mode must be \"independent\" or \"orthogonal\"");
  }
  return parsed;
}

}  // namespace

extern "C" {

const char* avck_last_error(void) { return g_last_error.c_str(); }

const char* avck_status_name(avck_status status) {
  switch (status) {
    case AVCK_OK:
      return "ok";
    case AVCK_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case AVCK_ERR_PARSE:
      return "spec parse error";
    case AVCK_ERR_NUMERIC:
      return "numeric failure";
    case AVCK_ERR_NOMEM:
      return "out of memory";
  }
  return "unknown status";
}

void avck_string_free(char* text) { delete[] text; }

avck_status avck_avc_create_bsc(const double* params, size_t num_states, avck_avc** out) {
  return guarded([&]() -> avck_status {
    if (params == nullptr || out == nullptr || num_states == 0)
      throw avck::domain_error("avck_avc_create_bsc: null or empty arguments");
    auto* handle = new avck_avc{avck::Avc::bsc_family(
        std::vector<double>(params, params + num_states))};
    *out = handle;
    return AVCK_OK;
  });
}

avck_status avck_avc_from_spec(const char* spec_json, const char* mode_override,
                               avck_avc** out) {
  return guarded([&]() -> avck_status {
    if (out == nullptr) throw avck::domain_error("avck_avc_from_spec: null output");
    avck::ParsedSpec parsed = parse_with_override(spec_json, mode_override);
    *out = new avck_avc{avck::build_composite(parsed.composite)};
    return AVCK_OK;
  });
}

void avck_avc_free(avck_avc* avc) { delete avc; }

avck_status avck_avc_dims(const avck_avc* avc, size_t* inputs, size_t* outputs,
                          size_t* states) {
  return guarded([&]() -> avck_status {
    if (avc == nullptr) throw avck::domain_error("avck_avc_dims: null handle");
    if (inputs) *inputs = avc->value.input_size();
    if (outputs) *outputs = avc->value.output_size();
    if (states) *states = avc->value.num_states();
    return AVCK_OK;
  });
}

avck_status avck_symmetrizability(const avck_avc* avc, double tol, int* symmetrizable,
                                  double* f_value) {
  return guarded([&]() -> avck_status {
    if (avc == nullptr) throw avck::domain_error("avck_symmetrizability: null handle");
    double use_tol = tol > 0.0 ? tol : avck::kSymmetrizableTol;
    avck::SymmetrizerResult r = avck::is_symmetrizable(avc->value, use_tol);
    if (symmetrizable) *symmetrizable = r.feasible ? 1 : 0;
    if (f_value) *f_value = r.f_value;
    return AVCK_OK;
  });
}

avck_status avck_cr_capacity(const avck_avc* avc, double* value) {
  return guarded([&]() -> avck_status {
    if (avc == nullptr || value == nullptr)
      throw avck::domain_error("avck_cr_capacity: null argument");
    *value = avck::cr_capacity(avc->value).value;
    return AVCK_OK;
  });
}

avck_status avck_deterministic_capacity(const avck_avc* avc, double* value) {
  return guarded([&]() -> avck_status {
    if (avc == nullptr || value == nullptr)
      throw avck::domain_error("avck_deterministic_capacity: null argument");
    *value = avck::deterministic_capacity(avc->value).value;
    return AVCK_OK;
  });
}

avck_status avck_analyze_json(const avck_avc* avc, double tol, char** out_json) {
  return guarded([&]() -> avck_status {
    if (avc == nullptr || out_json == nullptr)
      throw avck::domain_error("avck_analyze_json: null argument");
    double use_tol = tol > 0.0 ? tol : avck::kSymmetrizableTol;
    *out_json = copy_string(avck::analyze_report_json(avc->value, use_tol));
    return AVCK_OK;
  });
}

avck_status avck_capacity_json(const avck_avc* avc, char** out_json) {
  return guarded([&]() -> avck_status {
    if (avc == nullptr || out_json == nullptr)
      throw avck::domain_error("avck_capacity_json: null argument");
    *out_json = copy_string(avck::capacity_report_json(avc->value));
    return AVCK_OK;
  });
}

avck_status avck_superact_json(const char* spec_json, const char* mode_override,
                               int has_cost, double lambda, double gamma,
                               char** out_json) {
  return guarded([&]() -> avck_status {
    if (out_json == nullptr) throw avck::domain_error("avck_superact_json: null output");
    avck::ParsedSpec parsed = parse_with_override(spec_json, mode_override);
    std::optional<avck::CostModel> cost = parsed.cost;
    if (has_cost) cost = avck::CostModel::binary_default(lambda, gamma);
    avck::SuperactReport report =
        avck::superactivation_check(parsed.composite.components, parsed.composite.mode,
                                    parsed.composite.constraint, cost);
    *out_json = copy_string(avck::superact_report_json(report));
    return AVCK_OK;
  });
}

avck_status avck_region_csv(int k, double step, double w21, double w31, double w32,
                            char** out_csv) {
  return guarded([&]() -> avck_status {
    if (out_csv == nullptr) throw avck::domain_error("avck_region_csv: null output");
    avck::RegionScan scan = avck::region_scan(k, step, w21, w31, w32);
    *out_csv = copy_string(avck::region_scan_csv(scan));
    return AVCK_OK;
  });
}

avck_status avck_simulate_json(const avck_avc* avc, size_t n, size_t m, const char* policy,
                               const char* decoder, uint64_t trials, uint64_t seed,
                               double lambda, char** out_json) {
  return guarded([&]() -> avck_status {
    if (avc == nullptr || policy == nullptr || decoder == nullptr || out_json == nullptr)
      throw avck::domain_error("avck_simulate_json: null argument");
    const avck::Avc& channel = avc->value;

    std::string policy_text = policy;
    avck::JammerPolicy jam;
    if (policy_text.rfind("constant=", 0) == 0) {
      jam = avck::JammerPolicy::constant(
          static_cast<size_t>(std::stoul(policy_text.substr(9))));
    } else if (policy_text == "iid") {
      jam = avck::JammerPolicy::iid(avck::ProbVector::uniform(channel.num_states()));
    } else if (policy_text.rfind("iid=", 0) == 0) {
      std::vector<double> q;
      std::stringstream ss(policy_text.substr(4));
      std::string item;
      while (std::getline(ss, item, ',')) q.push_back(std::stod(item));
      jam = avck::JammerPolicy::iid(avck::ProbVector(q));
    } else if (policy_text == "symmetrizing") {
      avck::SymmetrizerResult sym = avck::symmetrizability_distance(channel);
      if (!sym.feasible || !sym.u)
        throw avck::domain_error(
            "simulate: channel is not symmetrizable, no symmetrizing strategy exists");
      jam = avck::JammerPolicy::symmetrizing(*sym.u);
    } else {
      throw avck::spec_error("simulate: unknown policy \"" + policy_text + "\"");
    }
    if (lambda >= 0.0)
      jam.cost = avck::CostModel::binary_default(lambda, 1.0);

    std::string decoder_text = decoder;
    avck::DecoderKind dec;
    if (decoder_text == "ml")
      dec = avck::DecoderKind::max_likelihood;
    else if (decoder_text == "hamming")
      dec = avck::DecoderKind::min_hamming;
    else
      throw avck::spec_error("simulate: unknown decoder \"" + decoder_text + "\"");

    avck::Codebook code =
        avck::random_code(n, m, avck::ProbVector::uniform(channel.input_size()), seed);
    avck::SimReport report =
        avck::simulate(channel, code, jam, dec,
                       avck::ProbVector::uniform(channel.num_states()), trials, seed);
    *out_json = copy_string(avck::sim_report_json(report));
    return AVCK_OK;
  });
}

}  // extern "C"
