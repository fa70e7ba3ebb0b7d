#include "zeemanopt/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace zeemanopt {

namespace {

struct RawEntry {
  std::string value;
  int line = 0;
};

using RawConfig = std::map<std::string, RawEntry>;

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

RawConfig tokenize(const std::string& text) {
  RawConfig raw;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    if (value.empty())
      throw ConfigError("line " + std::to_string(line_no) + ": key '" + key +
                        "' has no value");
    if (raw.count(key))
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" +
                        key + "' (first set on line " +
                        std::to_string(raw[key].line) + ")");
    raw[key] = {value, line_no};
  }
  return raw;
}

[[noreturn]] void bad_value(const std::string& key, const RawEntry& entry,
                            const std::string& expected) {
  throw ConfigError("line " + std::to_string(entry.line) + ": key '" + key +
                    "': cannot parse '" + entry.value + "' as " + expected);
}

double parse_double(const std::string& key, const RawEntry& entry) {
  char* end = nullptr;
  const double v = std::strtod(entry.value.c_str(), &end);
  if (end != entry.value.c_str() + entry.value.size() || !std::isfinite(v))
    bad_value(key, entry, "a number");
  return v;
}

int parse_int(const std::string& key, const RawEntry& entry) {
  char* end = nullptr;
  const long v = std::strtol(entry.value.c_str(), &end, 10);
  if (end != entry.value.c_str() + entry.value.size()) bad_value(key, entry, "an integer");
  return static_cast<int>(v);
}

double get_double(const RawConfig& raw, const std::string& key, double fallback) {
  const auto it = raw.find(key);
  return it == raw.end() ? fallback : parse_double(key, it->second);
}

int get_int(const RawConfig& raw, const std::string& key, int fallback) {
  const auto it = raw.find(key);
  return it == raw.end() ? fallback : parse_int(key, it->second);
}

std::string get_string(const RawConfig& raw, const std::string& key,
                       const std::string& fallback) {
  const auto it = raw.find(key);
  return it == raw.end() ? fallback : it->second.value;
}

HalfInteger get_half_integer(const RawConfig& raw, const std::string& key) {
  const auto& entry = raw.at(key);
  try {
    return HalfInteger::parse(entry.value);
  } catch (const std::invalid_argument&) {
    bad_value(key, entry, "an integer or half-integer");
  }
}

std::vector<double> parse_double_list(const std::string& key, const RawEntry& entry) {
  std::vector<double> values;
  std::istringstream stream(entry.value);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw ConfigError("line " + std::to_string(entry.line) + ": key '" + key +
                        "': empty entry in list '" + entry.value + "'");
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (end != item.c_str() + item.size() || !std::isfinite(v))
      bad_value(key, entry, "a comma-separated list of numbers");
    values.push_back(v);
  }
  if (values.empty()) bad_value(key, entry, "a comma-separated list of numbers");
  return values;
}

void check_keys(const RawConfig& raw, const std::string& scenario_name,
                const std::set<std::string>& allowed,
                const std::vector<std::string>& required) {
  for (const auto& [key, entry] : raw) {
    if (!allowed.count(key))
      throw ConfigError("line " + std::to_string(entry.line) + ": unknown key '" +
                        key + "' for scenario '" + scenario_name + "'");
  }
  for (const auto& key : required) {
    if (!raw.count(key))
      throw ConfigError("scenario '" + scenario_name +
                        "' requires key '" + key + "'");
  }
}

const std::set<std::string> kCommonKeys = {"scenario", "output", "format"};

std::set<std::string> with_common(std::set<std::string> keys) {
  keys.insert(kCommonKeys.begin(), kCommonKeys.end());
  return keys;
}

PumpParams parse_pump(const RawConfig& raw) {
  check_keys(raw, "pump",
             with_common({"jg", "je", "polarization", "gamma", "omega", "delta"}),
             {"jg", "je", "polarization"});
  PumpParams p;
  p.jg = get_half_integer(raw, "jg");
  p.je = get_half_integer(raw, "je");
  p.polarization = raw.at("polarization").value;
  p.gamma = get_double(raw, "gamma", 1.0);
  p.omega = get_double(raw, "omega", p.gamma);  // default drive strength: omega = gamma
  p.delta = get_double(raw, "delta", 0.0);
  try {
    p.pol();
    p.scheme();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("scenario 'pump': ") + e.what());
  }
  return p;
}

BurshteinParams parse_burshtein(const RawConfig& raw) {
  check_keys(raw, "burshtein",
             with_common({"case", "gamma_factor", "omega", "gamma_a", "gamma_b",
                          "cycles", "samples"}),
             {});
  BurshteinParams p;
  p.omega = get_double(raw, "omega", 1.0);
  p.cycles = get_double(raw, "cycles", 5.0);
  p.samples = get_int(raw, "samples", 1000);
  if (raw.count("case")) {
    if (raw.count("gamma_a") || raw.count("gamma_b"))
      throw ConfigError(
          "scenario 'burshtein': 'case' cannot be combined with explicit "
          "'gamma_a'/'gamma_b'");
    p.case_id = parse_int("case", raw.at("case"));
    p.gamma_factor = get_double(raw, "gamma_factor", 10.0);
  } else {
    if (raw.count("gamma_factor"))
      throw ConfigError("scenario 'burshtein': 'gamma_factor' requires 'case'");
    p.gamma_a = get_double(raw, "gamma_a", 0.0);
    p.gamma_b = get_double(raw, "gamma_b", 0.0);
  }
  try {
    p.params();
    if (!(p.cycles > 0.0)) throw std::invalid_argument("cycles must be > 0");
    if (p.samples < 2) throw std::invalid_argument("samples must be >= 2");
  } catch (const std::exception& e) {
    throw ConfigError(std::string("scenario 'burshtein': ") + e.what());
  }
  return p;
}

DmlParams parse_dml(const RawConfig& raw) {
  check_keys(raw, "dml",
             with_common({"omega", "delta", "gamma", "density", "length", "radius",
                          "wavelength", "direction", "threshold"}),
             {"density", "length", "radius", "wavelength"});
  DmlParams p;
  p.gamma = get_double(raw, "gamma", 1.0);
  p.omega = get_double(raw, "omega", p.gamma);
  p.delta = get_double(raw, "delta", 0.0);
  p.density = get_double(raw, "density", 0.0);
  p.length = get_double(raw, "length", 0.0);
  p.radius = get_double(raw, "radius", 0.0);
  p.wavelength = get_double(raw, "wavelength", 0.0);
  p.threshold = get_double(raw, "threshold", kDefaultGainLengthThreshold);
  try {
    p.direction = direction_from_string(get_string(raw, "direction", "forward"));
    p.scenario();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("scenario 'dml': ") + e.what());
  }
  return p;
}

ScanParams parse_scan(const RawConfig& raw) {
  check_keys(raw, "scan",
             with_common({"omega", "delta", "density", "length", "gamma", "radius",
                          "wavelength", "direction", "threshold"}),
             {"omega", "delta", "density", "length", "radius", "wavelength"});
  ScanParams p;
  p.grid.omega = parse_double_list("omega", raw.at("omega"));
  p.grid.delta = parse_double_list("delta", raw.at("delta"));
  p.grid.density = parse_double_list("density", raw.at("density"));
  p.grid.length = parse_double_list("length", raw.at("length"));
  p.grid.gamma = get_double(raw, "gamma", 1.0);
  p.grid.radius = get_double(raw, "radius", 0.0);
  p.grid.wavelength = get_double(raw, "wavelength", 0.0);
  p.threshold = get_double(raw, "threshold", kDefaultGainLengthThreshold);
  try {
    p.grid.direction = direction_from_string(get_string(raw, "direction", "forward"));
    if (!(p.grid.gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
    if (!(p.grid.radius > 0.0)) throw std::invalid_argument("radius must be > 0");
    if (!(p.grid.wavelength > 0.0))
      throw std::invalid_argument("wavelength must be > 0");
  } catch (const std::exception& e) {
    throw ConfigError(std::string("scenario 'scan': ") + e.what());
  }
  return p;
}

}  // namespace

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::Pump: return "pump";
    case Scenario::Burshtein: return "burshtein";
    case Scenario::Dml: return "dml";
    case Scenario::Scan: return "scan";
  }
  return "?";
}

PolarizationVector PumpParams::pol() const {
  if (polarization == "x") return PolarizationVector::linear_x();
  if (polarization == "y") return PolarizationVector::linear_y();
  if (polarization == "z") return PolarizationVector::linear_z();
  if (polarization == "sigma+") return PolarizationVector::sigma_plus();
  if (polarization == "sigma-") return PolarizationVector::sigma_minus();
  throw std::domain_error("polarization must be one of x, y, z, sigma+, sigma-; got '" +
                          polarization + "'");
}

TransitionScheme PumpParams::scheme() const {
  return {jg, je, gamma, omega, delta};
}

TwoLevelParams BurshteinParams::params() const {
  if (case_id != 0) return case_params(case_id, omega, gamma_factor);
  return {omega, gamma_a, gamma_b};
}

DmlScenario DmlParams::scenario() const {
  return {TransitionScheme(HalfInteger::from_int(1), HalfInteger::from_int(2), gamma,
                           omega, delta),
          density, length, radius, wavelength, direction};
}

RunConfig parse_config(const std::string& text) {
  RawConfig raw = tokenize(text);

  const auto scenario_it = raw.find("scenario");
  if (scenario_it == raw.end())
    throw ConfigError("missing required key 'scenario'");
  const std::string name = scenario_it->second.value;

  RunConfig config;
  if (name == "pump") {
    config.scenario = Scenario::Pump;
    config.params = parse_pump(raw);
  } else if (name == "burshtein") {
    config.scenario = Scenario::Burshtein;
    config.params = parse_burshtein(raw);
  } else if (name == "dml") {
    config.scenario = Scenario::Dml;
    config.params = parse_dml(raw);
  } else if (name == "scan") {
    config.scenario = Scenario::Scan;
    config.params = parse_scan(raw);
  } else {
    throw ConfigError("line " + std::to_string(scenario_it->second.line) +
                      ": unknown scenario '" + name +
                      "' (expected pump, burshtein, dml, or scan)");
  }

  config.output_path = get_string(raw, "output", "");
  const std::string format = get_string(raw, "format", "csv");
  if (format == "csv") {
    config.format = OutputFormat::Csv;
  } else if (format == "table") {
    config.format = OutputFormat::Table;
  } else {
    throw ConfigError("key 'format': expected 'csv' or 'table', got '" + format +
                      "'");
  }
  return config;
}

}  // namespace zeemanopt
