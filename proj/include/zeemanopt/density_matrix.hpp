#pragma once

#include <Eigen/Dense>

#include "zeemanopt/transition.hpp"

namespace zeemanopt {

// Density operator on the combined sublevel space, basis ordered ground
// m = -jg..jg then excited m = -je..je. Carries the ground/excited split so
// per-manifold populations can be read off.
class DensityMatrix {
 public:
  DensityMatrix(Eigen::MatrixXcd matrix, int ground_dim);

  // Unpolarized ground manifold: populations 1/(2jg+1) each, excited empty.
  static DensityMatrix ground_mixed(const TransitionScheme& scheme);
  // Embed a ground-manifold state into the full space, excited block empty.
  static DensityMatrix embed_ground(const TransitionScheme& scheme,
                                    const Eigen::MatrixXcd& rho_ground);

  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  Eigen::MatrixXcd& matrix() { return matrix_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  int ground_dim() const { return ground_dim_; }
  int excited_dim() const { return dim() - ground_dim_; }

  double trace_real() const { return matrix_.trace().real(); }
  Eigen::VectorXd ground_populations() const;
  Eigen::VectorXd excited_populations() const;
  double excited_population() const;

  double hermiticity_error() const;  // max |rho - rho^dagger|
  double min_eigenvalue() const;     // of the hermitized matrix

  void symmetrize();  // rho <- (rho + rho^dagger)/2

  // Enforce the state invariants (Hermitian, positive, trace <= 1 + tol);
  // throws std::domain_error with the violated property on failure.
  void check_physical(double tol = 1e-10) const;

 private:
  Eigen::MatrixXcd matrix_;
  int ground_dim_;
};

}  // namespace zeemanopt
