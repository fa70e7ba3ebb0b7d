#include "zeemanopt/angular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace zeemanopt {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

constexpr int kMaxFactorial = 64;

const BigInt& factorial(int n) {
  static const auto table = [] {
    std::array<BigInt, kMaxFactorial + 1> t;
    t[0] = 1;
    for (int i = 1; i <= kMaxFactorial; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table.at(static_cast<std::size_t>(n));
}

// Factorial of a twice-value known to be even and nonnegative.
const BigInt& fact2(int twice_n) { return factorial(twice_n / 2); }

double fact2_d(int twice_n) { return fact2(twice_n).convert_to<double>(); }

}  // namespace

double clebsch_gordan(HalfInteger j1, HalfInteger m1, HalfInteger j2, HalfInteger m2,
                      HalfInteger j, HalfInteger m) {
  require_valid_pair(j1, m1);
  require_valid_pair(j2, m2);
  require_valid_pair(j, m);
  require_in_range(j1);
  require_in_range(j2);
  require_in_range(j);

  if (m1 + m2 != m) return 0.0;
  if ((j1.twice() + j2.twice() + j.twice()) % 2 != 0) return 0.0;
  if (j.twice() > j1.twice() + j2.twice() ||
      j.twice() < std::abs(j1.twice() - j2.twice()))
    return 0.0;

  // Racah sum over exact rationals; a single float conversion at the end.
  const int t1 = j1.twice() + j2.twice() - j.twice();
  const int t2 = j1.twice() - j2.twice() + j.twice();
  const int t3 = -j1.twice() + j2.twice() + j.twice();
  const int tsum = j1.twice() + j2.twice() + j.twice() + 2;

  BigRational prefactor(BigInt(j.twice() + 1) * fact2(t1) * fact2(t2) * fact2(t3),
                        fact2(tsum));
  prefactor *= BigRational(fact2(j.twice() + m.twice()) * fact2(j.twice() - m.twice()) *
                               fact2(j1.twice() - m1.twice()) *
                               fact2(j1.twice() + m1.twice()) *
                               fact2(j2.twice() - m2.twice()) *
                               fact2(j2.twice() + m2.twice()),
                           BigInt(1));

  const int ta = j.twice() - j2.twice() + m1.twice();  // J - j2 + m1, doubled
  const int tb = j.twice() - j1.twice() - m2.twice();  // J - j1 - m2, doubled
  const int tk_min = std::max({0, -ta, -tb});
  const int tk_max =
      std::min({t1, j1.twice() - m1.twice(), j2.twice() + m2.twice()});

  BigRational sum(0);
  for (int tk = tk_min; tk <= tk_max; tk += 2) {
    BigInt denom = fact2(tk) * fact2(t1 - tk) * fact2(j1.twice() - m1.twice() - tk) *
                   fact2(j2.twice() + m2.twice() - tk) * fact2(ta + tk) *
                   fact2(tb + tk);
    if ((tk / 2) % 2 == 0) {
      sum += BigRational(BigInt(1), denom);
    } else {
      sum -= BigRational(BigInt(1), denom);
    }
  }
  if (sum == 0) return 0.0;

  const BigRational square = prefactor * sum * sum;
  const double magnitude = std::sqrt(square.convert_to<double>());
  return sum > 0 ? magnitude : -magnitude;
}

Eigen::MatrixXd wigner_d(HalfInteger j, double beta) {
  require_in_range(j);
  const int dim = multiplicity(j);
  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);

  Eigen::MatrixXd d(dim, dim);
  for (int row = 0; row < dim; ++row) {
    const int tmp = -j.twice() + 2 * row;  // 2 m'
    for (int col = 0; col < dim; ++col) {
      const int tm = -j.twice() + 2 * col;  // 2 m
      const double pref =
          std::sqrt(fact2_d(j.twice() + tmp) * fact2_d(j.twice() - tmp) *
                    fact2_d(j.twice() + tm) * fact2_d(j.twice() - tm));
      const int tk_min = std::max(0, tm - tmp);
      const int tk_max = std::min(j.twice() + tm, j.twice() - tmp);
      double sum = 0.0;
      for (int tk = tk_min; tk <= tk_max; tk += 2) {
        const double denom = fact2_d(j.twice() + tm - tk) * fact2_d(tk) *
                             fact2_d(j.twice() - tmp - tk) * fact2_d(tmp - tm + tk);
        const int pow_c = j.twice() - tk + (tm - tmp) / 2;
        const int pow_s = (tmp - tm) / 2 + tk;
        const int sign_exp = (tmp - tm) / 2 + tk / 2;
        const double sign = (sign_exp % 2 == 0) ? 1.0 : -1.0;
        sum += sign * std::pow(c, pow_c) * std::pow(s, pow_s) / denom;
      }
      d(row, col) = pref * sum;
    }
  }
  return d;
}

Eigen::MatrixXcd wigner_D(HalfInteger j, const RotationAngles& angles) {
  const Eigen::MatrixXd d = wigner_d(j, angles.beta);
  const int dim = multiplicity(j);
  Eigen::MatrixXcd out(dim, dim);
  for (int row = 0; row < dim; ++row) {
    const double mp = -j.value() + row;
    for (int col = 0; col < dim; ++col) {
      const double m = -j.value() + col;
      out(row, col) = std::polar(1.0, -mp * angles.alpha) * d(row, col) *
                      std::polar(1.0, -m * angles.gamma);
    }
  }
  return out;
}

Eigen::MatrixXcd rotate_density_matrix(const Eigen::MatrixXcd& rho,
                                       const RotationAngles& angles,
                                       const std::vector<HalfInteger>& manifolds) {
  if (manifolds.empty())
    throw std::domain_error("rotate_density_matrix: no manifolds given");
  int total = 0;
  for (const auto j : manifolds) {
    require_in_range(j);
    total += multiplicity(j);
  }
  if (rho.rows() != rho.cols() || rho.rows() != total)
    throw std::domain_error(
        "rotate_density_matrix: density matrix dimension " +
        std::to_string(rho.rows()) + " does not match the level structure (" +
        std::to_string(total) + ")");

  Eigen::MatrixXcd rotation = Eigen::MatrixXcd::Zero(total, total);
  int offset = 0;
  for (const auto j : manifolds) {
    const int dj = multiplicity(j);
    rotation.block(offset, offset, dj, dj) = wigner_D(j, angles);
    offset += dj;
  }
  return rotation * rho * rotation.adjoint();
}

PolarizationVector::PolarizationVector(Complex e_minus, Complex e_zero, Complex e_plus)
    : components_{e_minus, e_zero, e_plus} {
  const double norm =
      std::sqrt(std::norm(e_minus) + std::norm(e_zero) + std::norm(e_plus));
  if (!(norm > 1e-150))
    throw std::domain_error("polarization vector must be nonzero");
  for (auto& component : components_) component /= norm;
}

PolarizationVector PolarizationVector::from_cartesian(Complex ex, Complex ey, Complex ez) {
  constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  const Complex i(0.0, 1.0);
  const Complex e_plus = -(ex - i * ey) * inv_sqrt2;
  const Complex e_minus = (ex + i * ey) * inv_sqrt2;
  return {e_minus, ez, e_plus};
}

Complex PolarizationVector::component(int q) const {
  if (q < -1 || q > 1)
    throw std::domain_error("polarization component q must be -1, 0, or +1");
  return components_[static_cast<std::size_t>(q + 1)];
}

std::array<Complex, 3> PolarizationVector::cartesian() const {
  constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  const Complex i(0.0, 1.0);
  const Complex ex = (e_minus() - e_plus()) * inv_sqrt2;
  const Complex ey = -i * (e_minus() + e_plus()) * inv_sqrt2;
  return {ex, ey, e_zero()};
}

PolarizationVector PolarizationVector::rotated(const RotationAngles& angles) const {
  const Eigen::MatrixXcd d1 = wigner_D(HalfInteger::from_int(1), angles);
  Eigen::Vector3cd e(components_[0], components_[1], components_[2]);
  const Eigen::Vector3cd out = d1 * e;
  return {out(0), out(1), out(2)};
}

RotationAngles PolarizationVector::frame_rotation() const {
  const auto [ex, ey, ez] = cartesian();
  const Complex bilinear = ex * ex + ey * ey + ez * ez;
  if (std::abs(std::abs(bilinear) - 1.0) < 1e-9) {
    // Linear polarization: E = exp(i phi) n with n a real unit vector.
    const Complex phase = std::polar(1.0, -0.5 * std::arg(bilinear));
    Eigen::Vector3d n((ex * phase).real(), (ey * phase).real(), (ez * phase).real());
    n.normalize();
    const double theta = std::acos(std::clamp(n.z(), -1.0, 1.0));
    const double phi =
        (std::abs(n.x()) + std::abs(n.y()) > 1e-12) ? std::atan2(n.y(), n.x()) : 0.0;
    return {phi, theta, 0.0};
  }
  return {0.0, std::numbers::pi / 2.0, 0.0};
}

}  // namespace zeemanopt
