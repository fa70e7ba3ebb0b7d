#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

namespace zeemanopt {

// Raised when the controller drives the step size below the resolvable scale,
// which for these generators means a stiff system; long-time limits should go
// through the steady-state solver instead.
struct StiffnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OdeOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  long max_steps = 20'000'000;
};

namespace detail {

inline double error_norm(const Eigen::VectorXcd& err, const Eigen::VectorXcd& y0,
                         const Eigen::VectorXcd& y1, double abs_tol, double rel_tol) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < err.size(); ++i) {
    const double scale =
        abs_tol + rel_tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    const double e = std::abs(err[i]) / scale;
    sum += e * e;
  }
  return std::sqrt(sum / static_cast<double>(err.size()));
}

}  // namespace detail

// Dormand-Prince 5(4) embedded pair with standard proportional step control.
// `rhs(y)` returns dy/dt (autonomous systems only). `on_accept(t, y)` runs
// after every accepted step and may adjust y in place; the next stage
// derivative is recomputed afterwards, so adjustments stay consistent.
template <typename Rhs, typename OnAccept>
Eigen::VectorXcd integrate_dopri5(const Rhs& rhs, Eigen::VectorXcd y, double t0,
                                  double t1, const OdeOptions& opt,
                                  const OnAccept& on_accept) {
  if (t1 < t0) throw std::invalid_argument("integrate_dopri5: t1 < t0");
  if (t1 == t0) return y;

  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                   a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                   a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                   b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  // b - b* for the embedded 4th-order error estimate.
  constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                   e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                   e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

  const double span = t1 - t0;
  double t = t0;
  Eigen::VectorXcd k1 = rhs(y);

  // Initial step from the scaled magnitudes of y and f.
  double h;
  {
    const double d0 = y.norm();
    const double d1 = k1.norm();
    h = (d1 > 1e-300) ? 0.01 * std::max(d0, 1.0) / d1 : span / 100.0;
    h = std::min(h, span);
  }

  Eigen::VectorXcd k2, k3, k4, k5, k6, k7, y_new, err;
  for (long step = 0; step < opt.max_steps; ++step) {
    if (t >= t1) return y;
    h = std::min(h, t1 - t);
    const double h_floor =
        16.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(t), span);
    if (h < h_floor) {
      throw StiffnessError(
          "integrate_dopri5: step size underflow (stiff system); "
          "use the steady-state solver for long-time limits");
    }

    k2 = rhs(y + h * (a21 * k1));
    k3 = rhs(y + h * (a31 * k1 + a32 * k2));
    k4 = rhs(y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    k5 = rhs(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    k6 = rhs(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    k7 = rhs(y_new);

    err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    const double norm = detail::error_norm(err, y, y_new, opt.abs_tol, opt.rel_tol);

    if (norm <= 1.0) {
      t += h;
      y = y_new;
      on_accept(t, y);
      k1 = rhs(y);  // FSAL invalidated if on_accept touched y
    }
    double factor = (norm > 1e-30) ? 0.9 * std::pow(norm, -0.2) : 5.0;
    factor = std::clamp(factor, 0.2, 5.0);
    if (norm > 1.0) factor = std::min(factor, 1.0);
    h *= factor;
  }
  throw std::runtime_error("integrate_dopri5: exceeded maximum step count");
}

template <typename Rhs>
Eigen::VectorXcd integrate_dopri5(const Rhs& rhs, Eigen::VectorXcd y, double t0,
                                  double t1, const OdeOptions& opt) {
  return integrate_dopri5(rhs, std::move(y), t0, t1, opt,
                          [](double, Eigen::VectorXcd&) {});
}

}  // namespace zeemanopt
