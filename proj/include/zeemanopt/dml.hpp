#pragma once

#include <string>
#include <vector>

#include "zeemanopt/density_matrix.hpp"
#include "zeemanopt/transition.hpp"

namespace zeemanopt {

enum class Direction { Forward, Backward };

std::string to_string(Direction d);
Direction direction_from_string(const std::string& name);

// Default gain-length product treated as the lasing threshold; an
// amplified-spontaneous-emission criterion, configurable everywhere it is used.
inline constexpr double kDefaultGainLengthThreshold = 30.0;

// Pencil-shaped pumped volume on the J=1 -> J'=2 transition. The cylinder
// axis lies along the lab y axis; the probe runs along it in the given
// direction. The radius is carried for reporting, it does not enter the
// one-dimensional gain formula.
struct DmlScenario {
  DmlScenario(TransitionScheme scheme, double density, double length, double radius,
              double wavelength, Direction direction);

  TransitionScheme scheme;  // jg = 1, je = 2 enforced
  double density;           // atoms per m^3
  double length;            // m
  double radius;            // m
  double wavelength;        // m
  Direction direction;
};

struct TransitionInversion {
  int m_g;
  int m_e;
  double inversion;  // rho_ee - rho_gg
  double weight;     // normalized CG^2 weight of the probe transition
};

struct GainReport {
  double gain = 0.0;         // small-signal intensity gain, 1/m
  double gain_length = 0.0;  // gain * L
  bool lases = false;        // gain_length >= threshold
  double threshold = kDefaultGainLengthThreshold;
  Direction direction = Direction::Forward;
  double sigma0 = 0.0;  // resonant cross-section scale 3 lambda^2 / (2 pi)
  std::vector<TransitionInversion> per_transition;
};

// Unique stationary state of the z-pumped J=1 -> J'=2 system. Uniqueness is
// verified by a kernel-rank check; a degenerate kernel signals a bug.
DensityMatrix pump_steady_state_j1j2(double omega, double delta, double gamma);

// Resonant small-signal intensity gain of an x-polarized probe against the
// q = +-1 population inversions of rho_ss:
//   g = n * sigma0 * sum w(m_g, m_e) (rho_ee - rho_gg).
// Stationary atoms make the value direction-independent; the requested
// direction is carried as a label.
GainReport probe_gain(const DmlScenario& scenario, const DensityMatrix& rho_ss,
                      double threshold = kDefaultGainLengthThreshold);

struct ScanGrid {
  std::vector<double> omega;    // pump Rabi frequencies, rad/s
  std::vector<double> delta;    // pump detunings, rad/s
  std::vector<double> density;  // atoms per m^3
  std::vector<double> length;   // m
  double gamma = 1.0;
  double radius = 1e-3;
  double wavelength = 795e-9;
  Direction direction = Direction::Forward;
};

struct ScanRow {
  double omega;
  double delta;
  double density;
  double length;
  GainReport report;
};

// One row per grid point, ordered omega (outermost), delta, density, length
// (innermost). The steady state is computed once per (omega, delta) pair.
std::vector<ScanRow> threshold_scan(const ScanGrid& grid,
                                    double threshold = kDefaultGainLengthThreshold);

}  // namespace zeemanopt
