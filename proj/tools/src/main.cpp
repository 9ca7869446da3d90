#include "hankelscope_cli/cli.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
  namespace hc = hankelscope::cli;
  hc::RunConfig config;
  CLI::App app{"hankelscope: spectra of Hankel operators with quasi-Carleman and delta kernels"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.add_option("command", config.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(hc::kCommands));
  app.add_option("--p", config.p, "Kernel polynomial P, comma-separated, lowest degree first");
  app.add_option("--q", config.q, "Symbol polynomial Q, comma-separated, lowest degree first");
  app.add_option("--h", config.h, "Delta kernel coefficients h0,...,hK");
  app.add_option("--t0", config.t0, "Location of the delta kernel")->capture_default_str();
  app.add_option("--L", config.L, "Half-width of the log grid");
  app.add_option("--N", config.N, "Grid size (power of two) or collocation degree");
  app.add_option("--n-max", config.n_max, "Modes per sign for delta-eigs");
  app.add_option("--seed", config.seed, "Seed for the equiv-check test functions")->capture_default_str();
  app.add_option("--output", config.output, "Write the artifact to this path instead of stdout");
  app.add_option("--format", config.format, "json or csv")->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hc::kExitValidation;
  }
  return hc::run(config, std::cout, std::cerr);
}
