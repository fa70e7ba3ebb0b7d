#include "zeemanopt/density_matrix.hpp"

#include <stdexcept>
#include <string>

namespace zeemanopt {

DensityMatrix::DensityMatrix(Eigen::MatrixXcd matrix, int ground_dim)
    : matrix_(std::move(matrix)), ground_dim_(ground_dim) {
  if (matrix_.rows() != matrix_.cols())
    throw std::domain_error("density matrix must be square");
  if (ground_dim_ < 0 || ground_dim_ > matrix_.rows())
    throw std::domain_error("ground manifold dimension out of range");
}

DensityMatrix DensityMatrix::ground_mixed(const TransitionScheme& scheme) {
  const int dg = scheme.ground_dim();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(scheme.dim(), scheme.dim());
  rho.topLeftCorner(dg, dg) = Eigen::MatrixXcd::Identity(dg, dg) / double(dg);
  return {std::move(rho), dg};
}

DensityMatrix DensityMatrix::embed_ground(const TransitionScheme& scheme,
                                          const Eigen::MatrixXcd& rho_ground) {
  const int dg = scheme.ground_dim();
  if (rho_ground.rows() != dg || rho_ground.cols() != dg)
    throw std::domain_error("ground state has dimension " +
                            std::to_string(rho_ground.rows()) + ", expected " +
                            std::to_string(dg));
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(scheme.dim(), scheme.dim());
  rho.topLeftCorner(dg, dg) = rho_ground;
  return {std::move(rho), dg};
}

Eigen::VectorXd DensityMatrix::ground_populations() const {
  return matrix_.diagonal().head(ground_dim_).real();
}

Eigen::VectorXd DensityMatrix::excited_populations() const {
  return matrix_.diagonal().tail(excited_dim()).real();
}

double DensityMatrix::excited_population() const {
  return excited_dim() > 0 ? excited_populations().sum() : 0.0;
}

double DensityMatrix::hermiticity_error() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  const Eigen::MatrixXcd herm = 0.5 * (matrix_ + matrix_.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm,
                                                         Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

void DensityMatrix::symmetrize() {
  matrix_ = 0.5 * (matrix_ + matrix_.adjoint()).eval();
}

void DensityMatrix::check_physical(double tol) const {
  if (hermiticity_error() > tol)
    throw std::domain_error("density matrix is not Hermitian (max deviation " +
                            std::to_string(hermiticity_error()) + ")");
  const double lambda_min = min_eigenvalue();
  if (lambda_min < -tol)
    throw std::domain_error("density matrix has negative eigenvalue " +
                            std::to_string(lambda_min));
  const double tr = trace_real();
  if (tr < -tol || tr > 1.0 + tol)
    throw std::domain_error("density matrix trace " + std::to_string(tr) +
                            " outside [0, 1]");
}

}  // namespace zeemanopt
