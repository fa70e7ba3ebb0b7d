#include "zeemanopt/run.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "zeemanopt/density_matrix.hpp"
#include "zeemanopt/output.hpp"
#include "zeemanopt/pumping.hpp"

namespace zeemanopt {

namespace {

TextTable render_pump(const PumpParams& p) {
  const TransitionScheme scheme = p.scheme();
  const int dg = scheme.ground_dim();
  const Eigen::MatrixXcd rho_g0 =
      Eigen::MatrixXcd::Identity(dg, dg) / double(dg);
  const PumpingReport report = run_pumping(scheme, p.pol(), rho_g0);

  TextTable out;
  out.header.push_back("quantity");
  for (int i = 0; i < dg; ++i)
    out.header.push_back("m=" + scheme.ground_m(i).str());

  auto vector_row = [&](const std::string& label, auto&& values) {
    std::vector<std::string> row{label};
    for (int i = 0; i < dg; ++i) row.push_back(format_number(values(i)));
    out.rows.push_back(std::move(row));
  };
  auto scalar_row = [&](const std::string& label, double value) {
    std::vector<std::string> row{label, format_number(value)};
    row.resize(out.header.size());
    out.rows.push_back(std::move(row));
  };

  vector_row("initial_populations",
             [&](int i) { return rho_g0(i, i).real(); });
  vector_row("final_populations",
             [&](int i) { return report.final_ground_populations(i); });
  for (std::size_t k = 0; k < report.dark_basis.size(); ++k) {
    const auto& dark = report.dark_basis[k];
    vector_row("dark_state_" + std::to_string(k + 1) + "_re",
               [&](int i) { return dark(i).real(); });
    vector_row("dark_state_" + std::to_string(k + 1) + "_im",
               [&](int i) { return dark(i).imag(); });
  }
  scalar_row("time_to_completion", report.time_to_completion);
  scalar_row("consistency_residual", report.consistency_residual);
  return out;
}

TextTable render_burshtein(const BurshteinParams& p) {
  const TimeSeries series = sample_populations(p.params(), p.cycles, p.samples);
  TextTable out;
  out.header = {"rabi_cycles", "p_a", "p_b"};
  for (std::size_t i = 0; i < series.times.size(); ++i)
    out.rows.push_back({format_number(series.times[i]),
                        format_number(series.p_a[i]),
                        format_number(series.p_b[i])});
  return out;
}

std::string transition_tag(const TransitionInversion& t) {
  return "_mg=" + std::to_string(t.m_g) + "_me=" + std::to_string(t.m_e);
}

TextTable render_dml(const DmlParams& p) {
  const DensityMatrix rho_ss = pump_steady_state_j1j2(p.omega, p.delta, p.gamma);
  const GainReport report = probe_gain(p.scenario(), rho_ss, p.threshold);

  TextTable out;
  out.header = {"quantity", "value"};
  auto row = [&](const std::string& k, const std::string& v) {
    out.rows.push_back({k, v});
  };
  row("direction", to_string(report.direction));
  row("pump_omega", format_number(p.omega));
  row("pump_delta", format_number(p.delta));
  row("gamma", format_number(p.gamma));
  row("density_per_m3", format_number(p.density));
  row("length_m", format_number(p.length));
  row("radius_m", format_number(p.radius));
  row("wavelength_m", format_number(p.wavelength));
  row("sigma0_m2", format_number(report.sigma0));
  row("gain_per_m", format_number(report.gain));
  row("gain_length", format_number(report.gain_length));
  row("threshold", format_number(report.threshold));
  row("lases", report.lases ? "1" : "0");
  for (const auto& t : report.per_transition) {
    row("weight" + transition_tag(t), format_number(t.weight));
    row("inversion" + transition_tag(t), format_number(t.inversion));
  }
  return out;
}

TextTable render_scan(const ScanParams& p) {
  const std::vector<ScanRow> rows = threshold_scan(p.grid, p.threshold);
  TextTable out;
  out.header = {"omega", "delta", "density", "length",
                "gain_per_m", "gain_length", "lases"};
  for (const auto& r : rows)
    out.rows.push_back({format_number(r.omega), format_number(r.delta),
                        format_number(r.density), format_number(r.length),
                        format_number(r.report.gain),
                        format_number(r.report.gain_length),
                        r.report.lases ? "1" : "0"});
  return out;
}

}  // namespace

std::string render_output(const RunConfig& config) {
  TextTable table;
  switch (config.scenario) {
    case Scenario::Pump:
      table = render_pump(std::get<PumpParams>(config.params));
      break;
    case Scenario::Burshtein:
      table = render_burshtein(std::get<BurshteinParams>(config.params));
      break;
    case Scenario::Dml:
      table = render_dml(std::get<DmlParams>(config.params));
      break;
    case Scenario::Scan:
      table = render_scan(std::get<ScanParams>(config.params));
      break;
  }
  return config.format == OutputFormat::Csv ? table.csv() : table.table();
}

void run_to_output(const RunConfig& config) {
  const std::string text = render_output(config);
  if (config.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.output_path, std::ios::binary);
  if (!out) throw IoError("cannot open output file '" + config.output_path + "'");
  out << text;
  if (!out) throw IoError("failed writing output file '" + config.output_path + "'");
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string cases_text() {
  std::ostringstream out;
  out << "Two-level decay presets (default factor 10 for the strict "
         "orderings):\n";
  const char* descriptions[4] = {
      "undamped Rabi oscillations",
      "slowly decaying oscillations",
      "overdamped transfer, no oscillation",
      "equal fast decay; exp(gamma t) restores the undamped curve",
  };
  const char* rates[4] = {
      "gamma_a = 0,          gamma_b = 0",
      "gamma_a = 0,          gamma_b = omega/10",
      "gamma_a = 0,          gamma_b = 10*omega",
      "gamma_a = 10*omega,   gamma_b = 10*omega",
  };
  for (int c = 0; c < 4; ++c)
    out << "  case " << c + 1 << ": " << rates[c] << "\n           " << descriptions[c]
        << "\n";

  out << "\nCandidate endpoint populations for pumping J=1 -> J'=0 with "
         "x-polarized light\n(m = -1, 0, +1; the simulated answer is marked "
         "*):\n";
  for (const auto& answer : naive_answers()) {
    out << (answer.correct ? "  * " : "    ");
    for (const double p : answer.populations) out << format_number(p) << "  ";
    out << "- " << answer.label << "\n";
  }
  return out.str();
}

}  // namespace zeemanopt
