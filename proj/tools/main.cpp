// Scenario-driven front end: configure a group, character, and initial
// data in JSON, then simulate the wave evolution, run the verification
// families, estimate operator norms, or compare against the classical
// circle solution.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "groupwave/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"wave evolution on reduced group C*-algebras"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  groupwave::CommandOptions options;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "scenario config (JSON)")
        ->required();
    cmd->add_option("--out", out_path, "output path (overrides config)");
    cmd->add_option("--seed", options.seed,
                    "seed for random trial generation (verify)");
    cmd->add_option("--threads", options.threads, "worker thread count")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* simulate = app.add_subcommand("simulate", "run the wave evolution");
  CLI::App* verify =
      app.add_subcommand("verify", "run the invariant families");
  CLI::App* norms = app.add_subcommand("norms", "estimate operator norms");
  CLI::App* compare =
      app.add_subcommand("compare", "compare against the classical solution");
  for (CLI::App* cmd : {simulate, verify, norms, compare}) add_common(cmd);
  verify->add_flag("--corrupt-t-b", options.corrupt_t_b,
                   "test fixture: corrupt T_b as a negative control");

  CLI11_PARSE(app, argc, argv);

  try {
    options.out_override = out_path;
    groupwave::ScenarioConfig config =
        groupwave::load_scenario_file(config_path);
    if (simulate->parsed()) return groupwave::cmd_simulate(config, options);
    if (verify->parsed()) return groupwave::cmd_verify(config, options);
    if (norms->parsed()) return groupwave::cmd_norms(config, options);
    return groupwave::cmd_compare(config, options);
  } catch (const groupwave::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return groupwave::kExitConfigError;
  } catch (const groupwave::SemanticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return groupwave::kExitSemanticError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return groupwave::kExitConfigError;
  }
}
