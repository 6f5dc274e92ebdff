#include <CLI11.hpp>

#include <iostream>

#include "posmaps/version.hpp"
#include "posmaps_cli/cli.hpp"

namespace pc = posmaps::cli;

namespace {

void add_common(CLI::App* sub, pc::RunConfig& cfg) {
  sub->add_option("--map", cfg.map_path, "Map parameters (JSON)")->required();
  sub->add_option("--out", cfg.out_path, "Report path (default: stdout)");
  sub->add_option("--tol", cfg.tol, "PSD / boundary tolerance")->capture_default_str();
  sub->add_option("--seed", cfg.seed, "Seed for all randomness")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized D-type positive maps: classification, SPA and witnesses"};
  app.set_version_flag("--version", posmaps::kVersion);
  app.require_subcommand(1);

  pc::RunConfig cfg;

  auto* classify = app.add_subcommand("classify", "Positivity, CP, atomicity and decomposability");
  add_common(classify, cfg);
  classify->add_option("--samples", cfg.samples, "Random unit vectors for the positivity oracle")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* spectrum = app.add_subcommand("spectrum", "Choi matrix spectrum");
  add_common(spectrum, cfg);

  auto* decompose = app.add_subcommand("decompose", "Decomposability certificate (involutions)");
  add_common(decompose, cfg);

  auto* spa = app.add_subcommand("spa", "Structural physical approximation");
  add_common(spa, cfg);
  spa->add_flag("--decompose", cfg.decompose, "Emit the separable decomposition (a = n-1)");

  auto* witness = app.add_subcommand("witness", "Entanglement witness of T o Theta");
  add_common(witness, cfg);
  witness->add_flag("--certify", cfg.certify, "Certify optimality via the spanning property");
  std::string state;
  auto* state_opt = witness->add_option("--state", state, "Density matrix to evaluate Tr(W rho) on");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pc::kInputError;
  }

  if (*classify) cfg.subcommand = pc::Subcommand::classify;
  if (*spectrum) cfg.subcommand = pc::Subcommand::spectrum;
  if (*decompose) cfg.subcommand = pc::Subcommand::decompose;
  if (*spa) cfg.subcommand = pc::Subcommand::spa;
  if (*witness) cfg.subcommand = pc::Subcommand::witness;
  if (*state_opt) cfg.state_path = state;

  return pc::run(cfg, std::cerr);
}
