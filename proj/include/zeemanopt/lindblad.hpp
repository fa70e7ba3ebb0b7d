#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "zeemanopt/angular.hpp"
#include "zeemanopt/density_matrix.hpp"
#include "zeemanopt/transition.hpp"

namespace zeemanopt {

// Matrix representation of the master-equation generator acting on
// column-stacked density matrices (column-major vec).
struct Liouvillian {
  Eigen::MatrixXcd matrix;  // d^2 x d^2
  int dim = 0;              // d
  // Largest eigenvalue of sum_q L_q^dagger L_q; sets the natural unit for
  // convergence times and stationarity residuals.
  double decay_scale = 0.0;
  // Ground-manifold size when built from a TransitionScheme; 0 when unknown.
  int ground_dim = 0;
};

// Excited-from-ground coupling block V[m_e, m_g] = sum_q e_q <jg m_g; 1 q | je m_e>.
Eigen::MatrixXcd build_coupling(const TransitionScheme& scheme,
                                const PolarizationVector& pol);

// Rotating-frame Hamiltonian H = -delta P_e + (omega/2)(V + V^dagger) on the
// ground-then-excited block structure.
Eigen::MatrixXcd build_hamiltonian(const TransitionScheme& scheme,
                                   const PolarizationVector& pol);

// Spontaneous-emission jump operators L_q[m_g, m_e] = sqrt(gamma) <jg m_g; 1 q | je m_e>,
// one per spherical emission component q = -1, 0, +1, each on the full space.
std::vector<Eigen::MatrixXcd> build_dissipator(const TransitionScheme& scheme);

Liouvillian build_liouvillian(const Eigen::MatrixXcd& hamiltonian,
                              const std::vector<Eigen::MatrixXcd>& jumps);
Liouvillian build_liouvillian(const TransitionScheme& scheme,
                              const PolarizationVector& pol);

// rho(t) = exp(L t) rho0 by adaptive embedded Runge-Kutta integration with
// per-step relative error control at tol. The state is re-hermitized after
// each accepted step; an eigenvalue below -10*tol raises a diagnostic error.
DensityMatrix evolve(const DensityMatrix& rho0, const Liouvillian& liouvillian,
                     double t, double tol = 1e-10);

// Stationary state of L. A one-dimensional kernel is solved algebraically;
// a degenerate kernel needs rho0 and is resolved by evolving to the
// long-time limit. The result satisfies |L rho| <= 1e-8 |rho| (residual in
// units of the decay scale).
DensityMatrix steady_state(const Liouvillian& liouvillian,
                           const std::optional<DensityMatrix>& rho0 = std::nullopt);

// Dimension of the numerical kernel of L (relative singular-value threshold).
int kernel_dimension(const Liouvillian& liouvillian);

}  // namespace zeemanopt
