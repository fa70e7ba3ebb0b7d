#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

namespace zeemanopt {

// Resonantly coupled pair of states decaying into unobserved levels, so the
// total population is not conserved. Rates in rad/s.
struct TwoLevelParams {
  TwoLevelParams(double omega, double gamma_a, double gamma_b);

  double omega;
  double gamma_a;
  double gamma_b;
};

enum class DampingRegime { Oscillatory, CriticallyDamped, Overdamped };

// Amplitudes (c_A, c_B) at time t for c_A(0) = 1, c_B(0) = 0, solving
//   dc_A/dt = -(gamma_a/2) c_A - i (omega/2) c_B
//   dc_B/dt = -(gamma_b/2) c_B - i (omega/2) c_A
// via the exact 2x2 eigendecomposition; the critically damped case uses the
// analytic limit rather than parameter perturbation.
std::pair<std::complex<double>, std::complex<double>> amplitudes(
    double t, const TwoLevelParams& p);

double population_a(double t, const TwoLevelParams& p);
double population_b(double t, const TwoLevelParams& p);  // |c_B(t)|^2

// exp(gamma t) * population_b(t) for the equal-decay case gamma_a = gamma_b,
// which reproduces the undamped curve; unequal rates are a domain error.
double restored_envelope(double t, const TwoLevelParams& p);

// Oscillatory iff omega > |gamma_a - gamma_b| / 2, overdamped below, critical
// at equality (discriminant of the 2x2 eigenproblem).
DampingRegime classify_regime(const TwoLevelParams& p);

// Populations on an even time grid; times recorded as Rabi cycles omega*t/2pi.
struct TimeSeries {
  std::vector<double> times;
  std::vector<double> p_a;
  std::vector<double> p_b;
};

TimeSeries sample_populations(const TwoLevelParams& p, double t_cycles, int samples);

// The four canonical decay regimes:
//   1: gamma_a = gamma_b = 0
//   2: gamma_a = 0, gamma_b = omega / gamma_factor   (slow decay)
//   3: gamma_a = 0, gamma_b = omega * gamma_factor   (overdamped)
//   4: gamma_a = gamma_b = omega * gamma_factor      (equal fast decay)
std::array<TimeSeries, 4> four_cases(double omega, double gamma_factor,
                                     double t_cycles, int samples);

TwoLevelParams case_params(int case_id, double omega, double gamma_factor);

}  // namespace zeemanopt
