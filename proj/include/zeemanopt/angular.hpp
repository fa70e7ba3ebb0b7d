#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "zeemanopt/half_integer.hpp"

namespace zeemanopt {

using Complex = std::complex<double>;

// z-y-z Euler angles in radians: R(alpha, beta, gamma) = Rz(alpha) Ry(beta) Rz(gamma).
struct RotationAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  RotationAngles inverse() const { return {-gamma, -beta, -alpha}; }
};

// Unit polarization vector in the spherical basis
//   e_{+1} = -(x + iy)/sqrt(2),  e_0 = z,  e_{-1} = (x - iy)/sqrt(2),
// stored as the expansion coefficients e_q with sum_q |e_q|^2 = 1.
class PolarizationVector {
 public:
  // Components are normalized on construction; a zero vector is a domain error.
  PolarizationVector(Complex e_minus, Complex e_zero, Complex e_plus);

  static PolarizationVector from_cartesian(Complex ex, Complex ey, Complex ez);
  static PolarizationVector linear_x() { return from_cartesian(1.0, 0.0, 0.0); }
  static PolarizationVector linear_y() { return from_cartesian(0.0, 1.0, 0.0); }
  static PolarizationVector linear_z() { return from_cartesian(0.0, 0.0, 1.0); }
  static PolarizationVector sigma_plus() { return {0.0, 0.0, 1.0}; }
  static PolarizationVector sigma_minus() { return {1.0, 0.0, 0.0}; }

  Complex component(int q) const;  // q in {-1, 0, +1}
  Complex e_minus() const { return components_[0]; }
  Complex e_zero() const { return components_[1]; }
  Complex e_plus() const { return components_[2]; }

  std::array<Complex, 3> cartesian() const;  // (ex, ey, ez)

  // Components seen after rotating the physical field by R(angles): e' = D^1 e.
  PolarizationVector rotated(const RotationAngles& angles) const;

  // Rotation carrying the z axis onto the polarization direction when the
  // polarization is linear; a fixed beta = pi/2 probe rotation otherwise.
  // Rotating a problem by the inverse of this turns the drive into a q = 0 one.
  RotationAngles frame_rotation() const;

 private:
  std::array<Complex, 3> components_;  // ordered q = -1, 0, +1
};

// <j1 m1; j2 m2 | j m> in the Condon-Shortley convention. Selection-rule
// violations give 0; invalid (j, m) pairs or j beyond the cap throw.
double clebsch_gordan(HalfInteger j1, HalfInteger m1, HalfInteger j2, HalfInteger m2,
                      HalfInteger j, HalfInteger m);

// Small Wigner matrix d^j_{m'm}(beta); index 0 corresponds to m = -j.
Eigen::MatrixXd wigner_d(HalfInteger j, double beta);

// Full rotation matrix D^j_{m'm} = exp(-i m' alpha) d^j_{m'm}(beta) exp(-i m gamma).
Eigen::MatrixXcd wigner_D(HalfInteger j, const RotationAngles& angles);

// Block-diagonal D rho D^dagger over the listed J manifolds (in basis order).
// The manifold multiplicities must add up to the dimension of rho.
Eigen::MatrixXcd rotate_density_matrix(const Eigen::MatrixXcd& rho,
                                       const RotationAngles& angles,
                                       const std::vector<HalfInteger>& manifolds);

inline PolarizationVector polarization_from_cartesian(Complex ex, Complex ey, Complex ez) {
  return PolarizationVector::from_cartesian(ex, ey, ez);
}

}  // namespace zeemanopt
