#include "zeemanopt/burshtein.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zeemanopt {

using Complex = std::complex<double>;

TwoLevelParams::TwoLevelParams(double omega, double gamma_a, double gamma_b)
    : omega(omega), gamma_a(gamma_a), gamma_b(gamma_b) {
  if (!(omega >= 0.0) || !std::isfinite(omega))
    throw std::invalid_argument("omega must be finite and >= 0");
  if (!(gamma_a >= 0.0) || !std::isfinite(gamma_a))
    throw std::invalid_argument("gamma_a must be finite and >= 0");
  if (!(gamma_b >= 0.0) || !std::isfinite(gamma_b))
    throw std::invalid_argument("gamma_b must be finite and >= 0");
}

std::pair<Complex, Complex> amplitudes(double t, const TwoLevelParams& p) {
  if (!(t >= 0.0)) throw std::invalid_argument("amplitudes: t must be >= 0");

  // dc/dt = (-mu I - N) c with N = [[d, ik], [ik, -d]], N^2 = (d^2 - k^2) I,
  // so exp(-N t) = cosh(s t) I - sinh(s t)/s N with s = sqrt(d^2 - k^2).
  const double k = 0.5 * p.omega;
  const double mu = 0.25 * (p.gamma_a + p.gamma_b);
  const double d = 0.25 * (p.gamma_a - p.gamma_b);
  const Complex s = std::sqrt(Complex(d * d - k * k, 0.0));
  const Complex st = s * t;

  Complex ch;        // cosh(s t)
  Complex sinh_over_s;  // sinh(s t)/s -> t in the critically damped limit
  if (std::abs(st) < 1e-4) {
    const Complex x2 = st * st;
    ch = 1.0 + x2 * (0.5 + x2 / 24.0);
    sinh_over_s = t * (1.0 + x2 * (1.0 / 6.0 + x2 / 120.0));
  } else {
    ch = std::cosh(st);
    sinh_over_s = std::sinh(st) / s;
  }

  const double envelope = std::exp(-mu * t);
  const Complex c_a = envelope * (ch - d * sinh_over_s);
  const Complex c_b = envelope * Complex(0.0, -k) * sinh_over_s;
  return {c_a, c_b};
}

double population_a(double t, const TwoLevelParams& p) {
  return std::norm(amplitudes(t, p).first);
}

double population_b(double t, const TwoLevelParams& p) {
  return std::norm(amplitudes(t, p).second);
}

double restored_envelope(double t, const TwoLevelParams& p) {
  if (p.gamma_a != p.gamma_b)
    throw std::domain_error(
        "restored_envelope requires equal decay rates (gamma_a = gamma_b); the "
        "exponential only factors out in that case");
  return std::exp(p.gamma_a * t) * population_b(t, p);
}

DampingRegime classify_regime(const TwoLevelParams& p) {
  const double gap = 0.5 * std::abs(p.gamma_a - p.gamma_b);
  if (p.omega > gap) return DampingRegime::Oscillatory;
  if (p.omega < gap) return DampingRegime::Overdamped;
  return DampingRegime::CriticallyDamped;
}

TimeSeries sample_populations(const TwoLevelParams& p, double t_cycles, int samples) {
  if (!(t_cycles > 0.0)) throw std::invalid_argument("time horizon must be > 0");
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  if (!(p.omega > 0.0))
    throw std::invalid_argument("sampling in Rabi cycles needs omega > 0");

  const double cycle = 2.0 * std::numbers::pi / p.omega;
  TimeSeries series;
  series.times.reserve(samples);
  series.p_a.reserve(samples);
  series.p_b.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double cycles = t_cycles * double(i) / double(samples - 1);
    const auto [c_a, c_b] = amplitudes(cycles * cycle, p);
    series.times.push_back(cycles);
    series.p_a.push_back(std::norm(c_a));
    series.p_b.push_back(std::norm(c_b));
  }
  return series;
}

TwoLevelParams case_params(int case_id, double omega, double gamma_factor) {
  if (!(omega > 0.0)) throw std::invalid_argument("case presets need omega > 0");
  if (!(gamma_factor > 0.0))
    throw std::invalid_argument("gamma_factor must be > 0");
  switch (case_id) {
    case 1:
      return {omega, 0.0, 0.0};
    case 2:
      return {omega, 0.0, omega / gamma_factor};
    case 3:
      return {omega, 0.0, omega * gamma_factor};
    case 4:
      return {omega, omega * gamma_factor, omega * gamma_factor};
    default:
      throw std::invalid_argument("case id must be 1, 2, 3, or 4");
  }
}

std::array<TimeSeries, 4> four_cases(double omega, double gamma_factor,
                                     double t_cycles, int samples) {
  std::array<TimeSeries, 4> out;
  for (int c = 1; c <= 4; ++c)
    out[c - 1] = sample_populations(case_params(c, omega, gamma_factor), t_cycles,
                                    samples);
  return out;
}

}  // namespace zeemanopt
