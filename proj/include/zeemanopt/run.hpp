#pragma once

#include <stdexcept>
#include <string>

#include "zeemanopt/config.hpp"

namespace zeemanopt {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Execute the configured scenario and render its report (pure function of the
// config; identical configs give byte-identical text).
std::string render_output(const RunConfig& config);

// Render and write to config.output_path, or stdout when the path is empty.
void run_to_output(const RunConfig& config);

// Read a config file and parse it.
RunConfig load_config(const std::string& path);

// Text for the `cases` subcommand: the two-level decay presets and the
// candidate pumping endpoint answers.
std::string cases_text();

}  // namespace zeemanopt
