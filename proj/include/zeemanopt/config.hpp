#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "zeemanopt/angular.hpp"
#include "zeemanopt/burshtein.hpp"
#include "zeemanopt/dml.hpp"
#include "zeemanopt/transition.hpp"

namespace zeemanopt {

// Raised for malformed config text or schema violations; the message names
// the offending key and, where available, the line number.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Scenario { Pump, Burshtein, Dml, Scan };
enum class OutputFormat { Csv, Table };

std::string to_string(Scenario s);

struct PumpParams {
  HalfInteger jg;
  HalfInteger je;
  std::string polarization;  // "x", "y", "z", "sigma+", "sigma-"
  double gamma = 1.0;
  double omega = 1.0;
  double delta = 0.0;

  PolarizationVector pol() const;
  TransitionScheme scheme() const;
};

struct BurshteinParams {
  int case_id = 0;  // 0 = explicit rates, 1..4 = preset
  double gamma_factor = 10.0;
  double omega = 1.0;
  double gamma_a = 0.0;
  double gamma_b = 0.0;
  double cycles = 5.0;
  int samples = 1000;

  TwoLevelParams params() const;
};

struct DmlParams {
  double omega = 1.0;
  double delta = 0.0;
  double gamma = 1.0;
  double density = 0.0;
  double length = 0.0;
  double radius = 0.0;
  double wavelength = 0.0;
  Direction direction = Direction::Forward;
  double threshold = kDefaultGainLengthThreshold;

  DmlScenario scenario() const;
};

struct ScanParams {
  ScanGrid grid;
  double threshold = kDefaultGainLengthThreshold;
};

struct RunConfig {
  Scenario scenario;
  std::variant<PumpParams, BurshteinParams, DmlParams, ScanParams> params;
  std::string output_path;  // empty = stdout
  OutputFormat format = OutputFormat::Csv;
};

// Parse and validate the flat `key = value` config format (# starts a
// comment). Unknown keys, missing required keys, conflicting keys, and
// malformed values are all ConfigErrors.
RunConfig parse_config(const std::string& text);

}  // namespace zeemanopt
