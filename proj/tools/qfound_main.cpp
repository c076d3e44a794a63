// qfound_main.cpp
// Command-line driver: one subcommand per experiment family, seeded and
// deterministic, emitting a machine-readable report on stdout.  Exit status
// 0 iff every checked row passes; 2 on configuration or input errors.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qfound/experiments.hpp"
#include "qfound/report.hpp"

namespace {

std::pair<int, int> parse_resolution(const std::string& spec) {
  const auto x = spec.find('x');
  if (x == std::string::npos)
    throw CLI::ValidationError("--resolution", "expected the form <n_theta>x<n_phi>, e.g. 400x800");
  try {
    return {std::stoi(spec.substr(0, x)), std::stoi(spec.substr(x + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--resolution", "expected integers in <n_theta>x<n_phi>");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum foundations toolkit: toy-theory, phase-space and no-go experiments"};
  app.require_subcommand(1);

  qfound::experiments::ExperimentConfig config;
  std::string resolution = "400x800";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", config.seed, "random seed (default 42)");
    cmd->add_option("--samples", config.samples, "sampling rounds (default 1000000)");
    cmd->add_option("--format", config.format, "output format: json|csv (default json)");
  };

  CLI::App* toy = app.add_subcommand("toy", "measurement sequences on the four-cell toy universe");
  add_common(toy);
  toy->add_option("--state", config.toy_state,
                  "initial macrostate: a|b|c|abar|bbar|cbar|uniform (default a)");
  toy->add_option("--sequence", config.toy_sequence,
                  "comma-separated measurements, e.g. A,B,A (default)");

  CLI::App* chsh = app.add_subcommand("chsh", "cooperative-game analysis");
  add_common(chsh);
  std::string chsh_mode = "enumerate";
  chsh->add_option("mode", chsh_mode, "enumerate|quantum|lhv-sweep|simulate")
      ->check(CLI::IsMember({"enumerate", "quantum", "lhv-sweep", "simulate"}));
  chsh->add_option("--models", config.models, "models in the lhv sweep (default 1000)");

  CLI::App* ks = app.add_subcommand("ks", "sphere-model quadrature checks");
  add_common(ks);
  std::string ks_mode = "born";
  ks->add_option("mode", ks_mode, "born|overlap")
      ->check(CLI::IsMember({"born", "born-check", "overlap"}));
  ks->add_option("--resolution", resolution, "quadrature grid, e.g. 400x800 (default)");
  ks->add_option("--pairs", config.pairs, "random state/measurement pairs (default 100)");

  CLI::App* gaussian = app.add_subcommand("gaussian", "phase-space demonstrations");
  add_common(gaussian);
  std::string gaussian_mode = "uncertainty";
  gaussian->add_option("mode", gaussian_mode, "uncertainty|no-cloning|epr")
      ->check(CLI::IsMember({"uncertainty", "no-cloning", "epr"}));
  gaussian->add_option("--rr-scale", config.rr_scale, "resolution scale (default 0.5)");
  gaussian->add_option("--squeeze", config.squeeze, "correlation width s (default 1e-3)");
  gaussian->add_option("--displacement", config.displacement,
                       "position offset c between the particles (default 1)");
  gaussian->add_option("--models", config.models, "states in the uncertainty sweep (default 1000)");

  CLI::App* hardy = app.add_subcommand("hardy", "support-counting bound checks");
  add_common(hardy);
  hardy->add_option("--m", config.m, "number of states M (default 8)");
  hardy->add_option("--model", config.model_path, "finite-model JSON file with bindings");

  CLI::App* pbr = app.add_subcommand("pbr", "two-system overlap contradiction");
  add_common(pbr);
  pbr->add_option("--model", config.model_path,
                  "single-system model JSON with Psi1/Psi2 preparations");

  CLI::App* mz = app.add_subcommand("mach-zehnder", "interferometer detector statistics");
  add_common(mz);

  CLI11_PARSE(app, argc, argv);

  try {
    config.subcommand = app.get_subcommands().front()->get_name();
    if (config.subcommand == "chsh") config.mode = chsh_mode;
    if (config.subcommand == "ks") {
      config.mode = ks_mode;
      const auto [nt, np] = parse_resolution(resolution);
      config.n_theta = nt;
      config.n_phi = np;
    }
    if (config.subcommand == "gaussian") config.mode = gaussian_mode;

    const auto report = qfound::experiments::run(config);
    std::cout << qfound::report::emit(report, config.format);
    return report.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
