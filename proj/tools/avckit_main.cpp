// avckit command line. Thin shell over the C API: flags in, JSON/CSV out.
//
// Exit codes: 0 success, 2 usage or spec error, 3 internal numerical failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "avckit.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

int status_to_exit(avck_status status) {
  switch (status) {
    case AVCK_OK:
      return 0;
    case AVCK_ERR_PARSE:
    case AVCK_ERR_INVALID_ARGUMENT:
      return kExitUsage;
    default:
      return kExitNumeric;
  }
}

int report_failure(avck_status status) {
  std::cerr << "avckit: " << avck_status_name(status) << ": " << avck_last_error()
            << "\n";
  return status_to_exit(status);
}

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  *out = ss.str();
  return true;
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "avckit: cannot write " << out_path << "\n";
    return kExitUsage;
  }
  out << text;
  return 0;
}

struct SpecHandle {
  avck_avc* avc = nullptr;
  ~SpecHandle() { avck_avc_free(avc); }
};

int load_spec(const std::string& path, const std::string& mode, std::string* text,
              SpecHandle* handle) {
  if (!read_file(path, text)) {
    std::cerr << "avckit: cannot read spec file " << path << "\n";
    return kExitUsage;
  }
  avck_status status = avck_avc_from_spec(
      text->c_str(), mode.empty() ? nullptr : mode.c_str(), &handle->avc);
  if (status != AVCK_OK) return report_failure(status);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetrizability, capacity and jamming analysis for arbitrarily "
               "varying binary symmetric channels"};
  app.require_subcommand(1);

  std::string spec_path, out_path, mode;
  double tol = 0.0;
  double step = 0.025;
  double lambda = -1.0, gamma = -1.0;
  std::uint64_t seed = 1;
  std::uint64_t trials = 1000;

  auto add_spec_flags = [&](CLI::App* cmd, bool with_mode = true) {
    cmd->add_option("--spec", spec_path, "channel spec JSON file")->required();
    cmd->add_option("--out", out_path, "output path (default: stdout)");
    if (with_mode)
      cmd->add_option("--mode", mode, "override composite mode")
          ->check(CLI::IsMember({"independent", "orthogonal"}));
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "symmetrizability verdict, distance value and capacities");
  add_spec_flags(analyze);
  analyze->add_option("--tol", tol, "symmetrizability tolerance (default 1e-9)");

  CLI::App* region = app.add_subcommand(
      "region", "scan the first component's parameter square, CSV out");
  int region_k = 1;
  double w21 = 0.2, w31 = 0.1, w32 = 0.85;
  region->add_option("--k", region_k, "diversity order (1, 2 or 3)")->required();
  region->add_option("--step", step, "grid step in (0, 0.5)");
  region->add_option("--out", out_path, "output path (default: stdout)");
  region->add_option("--w21", w21, "second component flip parameter");
  region->add_option("--w31", w31, "third component first parameter");
  region->add_option("--w32", w32, "third component second parameter");

  CLI::App* capacity = app.add_subcommand(
      "capacity", "deterministic and CR-assisted capacity of the composite");
  add_spec_flags(capacity);

  CLI::App* superact = app.add_subcommand(
      "superact", "per-component and composite capacities with the "
                  "super-activation verdict");
  add_spec_flags(superact);
  superact->add_option("--lambda", lambda, "jammer state budget");
  superact->add_option("--gamma", gamma, "encoder input budget");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo decoding-error estimate under a jammer policy");
  add_spec_flags(simulate);
  std::size_t sim_n = 64, sim_m = 4;
  std::string policy = "symmetrizing", decoder = "ml";
  simulate->add_option("--n", sim_n, "block length");
  simulate->add_option("--M", sim_m, "number of messages");
  simulate->add_option("--policy", policy,
                       "constant=<s> | iid | iid=q1,q2,... | symmetrizing");
  simulate->add_option("--decoder", decoder, "ml | hamming")
      ->check(CLI::IsMember({"ml", "hamming"}));
  simulate->add_option("--trials", trials, "number of trials");
  simulate->add_option("--seed", seed, "RNG seed");
  simulate->add_option("--lambda", lambda, "jammer state budget (resampling filter)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  char* text = nullptr;
  avck_status status = AVCK_OK;

  if (analyze->parsed()) {
    std::string spec;
    SpecHandle handle;
    if (int rc = load_spec(spec_path, mode, &spec, &handle)) return rc;
    status = avck_analyze_json(handle.avc, tol, &text);
  } else if (region->parsed()) {
    status = avck_region_csv(region_k, step, w21, w31, w32, &text);
  } else if (capacity->parsed()) {
    std::string spec;
    SpecHandle handle;
    if (int rc = load_spec(spec_path, mode, &spec, &handle)) return rc;
    status = avck_capacity_json(handle.avc, &text);
  } else if (superact->parsed()) {
    std::string spec;
    if (!read_file(spec_path, &spec)) {
      std::cerr << "avckit: cannot read spec file " << spec_path << "\n";
      return kExitUsage;
    }
    if ((lambda >= 0.0) != (gamma >= 0.0)) {
      std::cerr << "avckit: --lambda and --gamma must be given together\n";
      return kExitUsage;
    }
    status = avck_superact_json(spec.c_str(), mode.empty() ? nullptr : mode.c_str(),
                                lambda >= 0.0 ? 1 : 0, lambda, gamma, &text);
  } else if (simulate->parsed()) {
    if (trials < 1) {
      std::cerr << "avckit: --trials must be at least 1\n";
      return kExitUsage;
    }
    std::string spec;
    SpecHandle handle;
    if (int rc = load_spec(spec_path, mode, &spec, &handle)) return rc;
    status = avck_simulate_json(handle.avc, sim_n, sim_m, policy.c_str(),
                                decoder.c_str(), trials, seed, lambda, &text);
  }

  if (status != AVCK_OK) return report_failure(status);
  int rc = emit(text ? text : "", out_path);
  avck_string_free(text);
  return rc;
}
