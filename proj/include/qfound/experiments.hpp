// experiments.hpp
// Experiment configuration and the dispatcher behind the command-line
// driver.  Every experiment is deterministic given its seed; reports carry
// one row per checked quantity.

#pragma once

#include <cstdint>
#include <string>

#include "qfound/report.hpp"

namespace qfound::experiments {

struct ExperimentConfig {
  std::string subcommand;  // toy | chsh | ks | gaussian | hardy | pbr | mach-zehnder
  std::string mode;        // per-subcommand mode, where applicable

  long long samples = 1'000'000;
  std::uint64_t seed = 42;
  int n_theta = 400;
  int n_phi = 800;
  int m = 8;
  double rr_scale = 0.5;
  double squeeze = 1e-3;
  double displacement = 1.0;
  int pairs = 100;
  int models = 1000;
  std::string format = "json";
  std::string model_path;

  std::string toy_state = "a";
  std::string toy_sequence = "A,B,A";
};

// Throws std::invalid_argument on out-of-range parameters.
void validate_config(const ExperimentConfig& config);

// Dispatches to the requested experiment and fills in the report (including
// wall-clock duration).  Deterministic given the seed, except for the
// duration field.
report::Report run(const ExperimentConfig& config);

}  // namespace qfound::experiments
