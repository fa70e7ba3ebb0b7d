#include "zeemanopt/dml.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zeemanopt/angular.hpp"
#include "zeemanopt/lindblad.hpp"

namespace zeemanopt {

std::string to_string(Direction d) {
  return d == Direction::Forward ? "forward" : "backward";
}

Direction direction_from_string(const std::string& name) {
  if (name == "forward") return Direction::Forward;
  if (name == "backward") return Direction::Backward;
  throw std::domain_error("direction must be 'forward' or 'backward', got '" +
                          name + "'");
}

DmlScenario::DmlScenario(TransitionScheme scheme, double density, double length,
                         double radius, double wavelength, Direction direction)
    : scheme(scheme),
      density(density),
      length(length),
      radius(radius),
      wavelength(wavelength),
      direction(direction) {
  if (scheme.jg != HalfInteger::from_int(1) || scheme.je != HalfInteger::from_int(2))
    throw std::domain_error("DML scenario requires a J=1 -> J'=2 transition");
  if (!(density > 0.0)) throw std::domain_error("density must be > 0");
  if (!(length > 0.0)) throw std::domain_error("length must be > 0");
  if (!(radius > 0.0)) throw std::domain_error("radius must be > 0");
  if (!(wavelength > 0.0)) throw std::domain_error("wavelength must be > 0");
}

DensityMatrix pump_steady_state_j1j2(double omega, double delta, double gamma) {
  if (!(omega > 0.0)) throw std::invalid_argument("pump omega must be > 0");
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");

  const TransitionScheme scheme(HalfInteger::from_int(1), HalfInteger::from_int(2),
                                gamma, omega, delta);
  const Liouvillian liou =
      build_liouvillian(scheme, PolarizationVector::linear_z());
  const int kernel = kernel_dimension(liou);
  if (kernel != 1)
    throw std::runtime_error(
        "pump_steady_state_j1j2: expected a unique stationary state but the "
        "kernel is " +
        std::to_string(kernel) + "-dimensional (internal consistency failure)");
  return steady_state(liou);
}

GainReport probe_gain(const DmlScenario& scenario, const DensityMatrix& rho_ss,
                      double threshold) {
  const TransitionScheme& scheme = scenario.scheme;
  if (rho_ss.dim() != scheme.dim() || rho_ss.ground_dim() != scheme.ground_dim())
    throw std::domain_error(
        "probe_gain: steady state does not match the J=1 -> J'=2 scheme");

  const HalfInteger one = HalfInteger::from_int(1);
  const double sigma0 =
      3.0 * scenario.wavelength * scenario.wavelength / (2.0 * std::numbers::pi);

  // An x-polarized probe addresses the q = -1 and q = +1 transitions.
  GainReport report;
  double weight_total = 0.0;
  for (int mg = -1; mg <= 1; ++mg) {
    for (int q = -1; q <= 1; q += 2) {
      const int me = mg + q;
      const double cg =
          clebsch_gordan(scheme.jg, HalfInteger::from_int(mg), one,
                         HalfInteger::from_int(q), scheme.je,
                         HalfInteger::from_int(me));
      const double pop_e =
          rho_ss.matrix()(scheme.excited_index(HalfInteger::from_int(me)),
                          scheme.excited_index(HalfInteger::from_int(me)))
              .real();
      const double pop_g =
          rho_ss.matrix()(scheme.ground_index(HalfInteger::from_int(mg)),
                          scheme.ground_index(HalfInteger::from_int(mg)))
              .real();
      report.per_transition.push_back({mg, me, pop_e - pop_g, cg * cg});
      weight_total += cg * cg;
    }
  }

  double weighted_inversion = 0.0;
  for (auto& row : report.per_transition) {
    row.weight /= weight_total;
    weighted_inversion += row.weight * row.inversion;
  }

  report.sigma0 = sigma0;
  report.gain = scenario.density * sigma0 * weighted_inversion;
  report.gain_length = report.gain * scenario.length;
  report.threshold = threshold;
  report.lases = report.gain_length >= threshold;
  report.direction = scenario.direction;
  return report;
}

std::vector<ScanRow> threshold_scan(const ScanGrid& grid, double threshold) {
  if (grid.omega.empty() || grid.delta.empty() || grid.density.empty() ||
      grid.length.empty())
    throw std::invalid_argument(
        "threshold_scan: every grid axis (omega, delta, density, length) needs "
        "at least one value");

  std::vector<ScanRow> rows;
  rows.reserve(grid.omega.size() * grid.delta.size() * grid.density.size() *
               grid.length.size());
  for (const double omega : grid.omega) {
    for (const double delta : grid.delta) {
      const DensityMatrix rho_ss =
          pump_steady_state_j1j2(omega, delta, grid.gamma);
      for (const double density : grid.density) {
        for (const double length : grid.length) {
          const DmlScenario scenario(
              TransitionScheme(HalfInteger::from_int(1), HalfInteger::from_int(2),
                               grid.gamma, omega, delta),
              density, length, grid.radius, grid.wavelength, grid.direction);
          rows.push_back(
              {omega, delta, density, length, probe_gain(scenario, rho_ss, threshold)});
        }
      }
    }
  }
  return rows;
}

}  // namespace zeemanopt
