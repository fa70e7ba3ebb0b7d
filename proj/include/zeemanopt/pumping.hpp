#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "zeemanopt/angular.hpp"
#include "zeemanopt/transition.hpp"

namespace zeemanopt {

struct PumpingReport {
  // Ground-sublevel populations along z after pumping completes, m = -jg..jg.
  Eigen::VectorXd final_ground_populations;
  // Orthonormal basis of the uncoupled (dark) ground subspace.
  std::vector<Eigen::VectorXcd> dark_basis;
  // Completion time in units of 1/gamma (Gamma * t).
  double time_to_completion = 0.0;
  // Max-norm mismatch against the same run performed in the rotated
  // (polarization-axis) basis and rotated back.
  double consistency_residual = 0.0;
};

// Orthonormal basis of the null space of the coupling block; empty when every
// ground state couples to the light.
std::vector<Eigen::VectorXcd> dark_states(const TransitionScheme& scheme,
                                          const PolarizationVector& pol);

// Evolve rho_g0 (a trace-one ground-manifold state) under pumping until the
// completion criterion holds: excited population < 1e-10 and the state moves
// by less than 1e-10 (max norm) over a further 5/gamma.
PumpingReport run_pumping(const TransitionScheme& scheme, const PolarizationVector& pol,
                          const Eigen::MatrixXcd& rho_g0);

struct CandidateAnswer {
  std::string label;
  std::array<double, 3> populations;  // m = -1, 0, +1
  bool correct;
};

// The three candidate endpoint-population answers for pumping J=1 -> J'=0
// with x-polarized light; only the last one survives simulation.
std::array<CandidateAnswer, 3> naive_answers();

}  // namespace zeemanopt
