#include "zeemanopt/pumping.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/SVD>

#include "zeemanopt/density_matrix.hpp"
#include "zeemanopt/lindblad.hpp"

namespace zeemanopt {

namespace {

constexpr double kExcitedEmptyTol = 1e-10;
constexpr double kStationaryTol = 1e-10;
constexpr double kEvolveTol = 1e-12;

// Evolve the embedded ground state until pumping completes: excited manifold
// below 1e-10 and the state stationary to 1e-10 (max norm) over a further
// 5/gamma. Returns the settled state and the completion time (gamma * t).
std::pair<DensityMatrix, double> pump_to_completion(const TransitionScheme& scheme,
                                                    const PolarizationVector& pol,
                                                    const Eigen::MatrixXcd& rho_g0) {
  const Liouvillian liou = build_liouvillian(scheme, pol);
  DensityMatrix current = DensityMatrix::embed_ground(scheme, rho_g0);
  const double chunk = 5.0 / scheme.gamma;
  const double t_max = 1e5 / scheme.gamma;

  double t = 0.0;
  while (t <= t_max) {
    DensityMatrix probe = evolve(current, liou, chunk, kEvolveTol);
    const double delta =
        (probe.matrix() - current.matrix()).cwiseAbs().maxCoeff();
    if (current.excited_population() < kExcitedEmptyTol && delta < kStationaryTol)
      return {std::move(current), scheme.gamma * t};
    current = std::move(probe);
    t += chunk;
  }
  throw std::runtime_error(
      "run_pumping: optical pumping had not completed by gamma*t = " +
      std::to_string(scheme.gamma * t_max));
}

}  // namespace

std::vector<Eigen::VectorXcd> dark_states(const TransitionScheme& scheme,
                                          const PolarizationVector& pol) {
  const Eigen::MatrixXcd v = build_coupling(scheme, pol);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(v, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = 1e-10 * std::max(sv.size() > 0 ? sv(0) : 0.0, 1.0);

  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;

  std::vector<Eigen::VectorXcd> basis;
  for (int col = rank; col < scheme.ground_dim(); ++col) {
    Eigen::VectorXcd vec = svd.matrixV().col(col);
    // Fix the global phase: largest component real positive.
    Eigen::Index imax = 0;
    vec.cwiseAbs().maxCoeff(&imax);
    const Complex pivot = vec(imax);
    if (std::abs(pivot) > 0.0) vec *= std::conj(pivot) / std::abs(pivot);
    basis.push_back(std::move(vec));
  }
  return basis;
}

PumpingReport run_pumping(const TransitionScheme& scheme, const PolarizationVector& pol,
                          const Eigen::MatrixXcd& rho_g0) {
  if (rho_g0.rows() != scheme.ground_dim() || rho_g0.cols() != scheme.ground_dim())
    throw std::domain_error("run_pumping: rho_g0 must live on the ground manifold");
  if ((rho_g0 - rho_g0.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::domain_error("run_pumping: rho_g0 must be Hermitian");
  if (std::abs(rho_g0.trace().real() - 1.0) > 1e-8 ||
      std::abs(rho_g0.trace().imag()) > 1e-10)
    throw std::domain_error("run_pumping: rho_g0 must have unit trace");
  if (!(scheme.gamma > 0.0))
    throw std::domain_error("run_pumping: pumping needs gamma > 0 to complete");

  auto [rho_final, completion] = pump_to_completion(scheme, pol, rho_g0);

  // The same computation in the basis quantized along the polarization axis,
  // rotated back; agreement is the testable content of the axis-choice
  // argument.
  const RotationAngles frame = pol.frame_rotation();
  const RotationAngles inverse = frame.inverse();
  const PolarizationVector pol_rotated = pol.rotated(inverse);
  const Eigen::MatrixXcd rho_g0_rotated =
      rotate_density_matrix(rho_g0, inverse, {scheme.jg});
  auto [rho_final_rotated, completion_rotated] =
      pump_to_completion(scheme, pol_rotated, rho_g0_rotated);
  const Eigen::MatrixXcd back = rotate_density_matrix(
      rho_final_rotated.matrix(), frame, {scheme.jg, scheme.je});

  PumpingReport report;
  report.final_ground_populations = rho_final.ground_populations();
  report.dark_basis = dark_states(scheme, pol);
  report.time_to_completion = completion;
  report.consistency_residual =
      (rho_final.matrix() - back).cwiseAbs().maxCoeff();
  return report;
}

std::array<CandidateAnswer, 3> naive_answers() {
  return {{
      {"everything collects in the uncoupled m=0 sublevel", {0.0, 1.0, 0.0}, false},
      {"bright superposition emptied, decay into the dark pair ignored",
       {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0},
       false},
      {"dark states filled by both pumping and spontaneous decay",
       {0.25, 0.5, 0.25},
       true},
  }};
}

}  // namespace zeemanopt
