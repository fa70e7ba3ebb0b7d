#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zeemanopt/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Zeeman-sublevel quantum optics toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string format;

  auto* run_cmd =
      app.add_subcommand("run", "Execute a scenario config and write its report");
  run_cmd->add_option("config", config_path, "Path to the config file")
      ->required();
  run_cmd->add_option("--out", out_path,
                      "Output path (overrides the config; default stdout)");
  run_cmd->add_option("--format", format, "Output format (overrides the config)")
      ->check(CLI::IsMember({"csv", "table"}));

  auto* validate_cmd =
      app.add_subcommand("validate", "Check a config file without running it");
  validate_cmd->add_option("config", config_path, "Path to the config file")
      ->required();

  auto* cases_cmd = app.add_subcommand(
      "cases", "Print the two-level decay presets and the candidate pumping answers");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cases_cmd->parsed()) {
      std::cout << zeemanopt::cases_text();
      return 0;
    }

    zeemanopt::RunConfig config = zeemanopt::load_config(config_path);
    if (validate_cmd->parsed()) {
      std::cout << "OK: valid '" << zeemanopt::to_string(config.scenario)
                << "' scenario\n";
      return 0;
    }

    if (!out_path.empty()) config.output_path = out_path;
    if (format == "csv") config.format = zeemanopt::OutputFormat::Csv;
    if (format == "table") config.format = zeemanopt::OutputFormat::Table;
    zeemanopt::run_to_output(config);
    return 0;
  } catch (const zeemanopt::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
