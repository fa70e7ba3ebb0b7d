#include "zeemanopt/lindblad.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

#include "zeemanopt/ode.hpp"

namespace zeemanopt {

namespace {

// Relative singular-value cutoff separating the numerical kernel of the
// Liouvillian from its slow modes. Slow optical-pumping rates scale like
// CG^2 (omega/gamma)^2, which reaches ~3e-14 of sigma_max at the weakest
// drive the scenarios use (omega = 1e-6 gamma); the Jacobi SVD resolves
// exact kernel values to ~1e-17 relative, so 1e-15 splits the two groups.
constexpr double kKernelRelThreshold = 1e-15;

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Eigen::MatrixXcd unvec(const Eigen::VectorXcd& v, int d) {
  return Eigen::Map<const Eigen::MatrixXcd>(v.data(), d, d);
}

Eigen::VectorXcd vec(const Eigen::MatrixXcd& m) {
  return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

// Stationarity residual |L rho| / (decay_scale * |rho|), Frobenius norms.
double relative_residual(const Liouvillian& liou, const Eigen::MatrixXcd& rho) {
  const double scale = liou.decay_scale > 0.0 ? liou.decay_scale : 1.0;
  return (liou.matrix * vec(rho)).norm() / (scale * rho.norm());
}

}  // namespace

Eigen::MatrixXcd build_coupling(const TransitionScheme& scheme,
                                const PolarizationVector& pol) {
  const HalfInteger one = HalfInteger::from_int(1);
  Eigen::MatrixXcd v =
      Eigen::MatrixXcd::Zero(scheme.excited_dim(), scheme.ground_dim());
  for (int e = 0; e < scheme.excited_dim(); ++e) {
    const HalfInteger me = scheme.excited_m(e);
    for (int g = 0; g < scheme.ground_dim(); ++g) {
      const HalfInteger mg = scheme.ground_m(g);
      const int tq = me.twice() - mg.twice();
      if (std::abs(tq) > 2) continue;
      const HalfInteger q = HalfInteger::from_twice(tq);
      v(e, g) = pol.component(tq / 2) *
                clebsch_gordan(scheme.jg, mg, one, q, scheme.je, me);
    }
  }
  return v;
}

Eigen::MatrixXcd build_hamiltonian(const TransitionScheme& scheme,
                                   const PolarizationVector& pol) {
  const int d = scheme.dim();
  const int dg = scheme.ground_dim();
  const int de = scheme.excited_dim();
  const Eigen::MatrixXcd v = build_coupling(scheme, pol);

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
  h.block(dg, 0, de, dg) = 0.5 * scheme.omega * v;
  h.block(0, dg, dg, de) = 0.5 * scheme.omega * v.adjoint();
  h.block(dg, dg, de, de) -= scheme.delta * Eigen::MatrixXcd::Identity(de, de);
  return h;
}

std::vector<Eigen::MatrixXcd> build_dissipator(const TransitionScheme& scheme) {
  const HalfInteger one = HalfInteger::from_int(1);
  const int d = scheme.dim();
  const double amp = std::sqrt(scheme.gamma);

  std::vector<Eigen::MatrixXcd> jumps;
  for (int q = -1; q <= 1; ++q) {
    Eigen::MatrixXcd jump = Eigen::MatrixXcd::Zero(d, d);
    for (int g = 0; g < scheme.ground_dim(); ++g) {
      const HalfInteger mg = scheme.ground_m(g);
      const HalfInteger me = mg + HalfInteger::from_int(q);
      if (!valid_projection(scheme.je, me)) continue;
      jump(g, scheme.excited_index(me)) =
          amp * clebsch_gordan(scheme.jg, mg, one, HalfInteger::from_int(q),
                               scheme.je, me);
    }
    jumps.push_back(std::move(jump));
  }
  return jumps;
}

Liouvillian build_liouvillian(const Eigen::MatrixXcd& hamiltonian,
                              const std::vector<Eigen::MatrixXcd>& jumps) {
  const Eigen::Index d = hamiltonian.rows();
  if (hamiltonian.cols() != d)
    throw std::domain_error("build_liouvillian: Hamiltonian must be square");
  for (const auto& jump : jumps)
    if (jump.rows() != d || jump.cols() != d)
      throw std::domain_error(
          "build_liouvillian: jump operator dimension mismatch");

  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  const Complex i(0.0, 1.0);

  Eigen::MatrixXcd m =
      -i * (kron(id, hamiltonian) - kron(hamiltonian.transpose(), id));
  Eigen::MatrixXcd total_decay = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& jump : jumps) {
    const Eigen::MatrixXcd jj = jump.adjoint() * jump;
    m += kron(jump.conjugate(), jump) - 0.5 * kron(id, jj) -
         0.5 * kron(jj.transpose(), id);
    total_decay += jj;
  }

  Liouvillian liou;
  liou.matrix = std::move(m);
  liou.dim = static_cast<int>(d);
  if (!jumps.empty()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(total_decay,
                                                           Eigen::EigenvaluesOnly);
    liou.decay_scale = std::max(0.0, solver.eigenvalues().maxCoeff());
  }
  return liou;
}

Liouvillian build_liouvillian(const TransitionScheme& scheme,
                              const PolarizationVector& pol) {
  Liouvillian liou = build_liouvillian(build_hamiltonian(scheme, pol),
                                       build_dissipator(scheme));
  liou.ground_dim = scheme.ground_dim();
  return liou;
}

DensityMatrix evolve(const DensityMatrix& rho0, const Liouvillian& liouvillian,
                     double t, double tol) {
  if (!(t >= 0.0)) throw std::invalid_argument("evolve: t must be >= 0");
  if (!(tol > 0.0) || tol > 1e-3)
    throw std::invalid_argument("evolve: tol must lie in (0, 1e-3]");
  if (rho0.dim() != liouvillian.dim)
    throw std::domain_error("evolve: state and Liouvillian dimensions differ");
  if (t == 0.0) return rho0;

  const int d = liouvillian.dim;
  const auto rhs = [&](const Eigen::VectorXcd& y) -> Eigen::VectorXcd {
    return liouvillian.matrix * y;
  };
  const auto on_accept = [&](double, Eigen::VectorXcd& y) {
    Eigen::Map<Eigen::MatrixXcd> rho(y.data(), d, d);
    rho = (0.5 * (rho + rho.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho,
                                                           Eigen::EigenvaluesOnly);
    const double lambda_min = solver.eigenvalues().minCoeff();
    if (lambda_min < -10.0 * tol)
      throw std::domain_error("evolve: state acquired negative eigenvalue " +
                              std::to_string(lambda_min) +
                              " (below -10*tol); inputs are likely unphysical");
  };

  OdeOptions opt;
  opt.rel_tol = tol;
  opt.abs_tol = 1e-13;
  Eigen::VectorXcd y =
      integrate_dopri5(rhs, vec(rho0.matrix()), 0.0, t, opt, on_accept);
  return {unvec(y, d), rho0.ground_dim()};
}

int kernel_dimension(const Liouvillian& liouvillian) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(liouvillian.matrix);
  const auto& sv = svd.singularValues();
  const double sigma_max = sv(0);
  if (sigma_max == 0.0) return liouvillian.dim * liouvillian.dim;
  int count = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) <= kKernelRelThreshold * sigma_max) ++count;
  return count;
}

DensityMatrix steady_state(const Liouvillian& liouvillian,
                           const std::optional<DensityMatrix>& rho0) {
  const int d = liouvillian.dim;
  const int n = d * d;

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(liouvillian.matrix, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double sigma_max = sv(0);
  int kernel_dim = 0;
  if (sigma_max == 0.0) {
    kernel_dim = n;
  } else {
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) <= kKernelRelThreshold * sigma_max) ++kernel_dim;
  }

  const int ground_dim = rho0 ? rho0->ground_dim()
                              : (liouvillian.ground_dim > 0
                                     ? liouvillian.ground_dim
                                     : d);  // generic L carries no split

  if (kernel_dim == 1) {
    Eigen::MatrixXcd rho = unvec(svd.matrixV().col(n - 1), d);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    const double tr = rho.trace().real();
    if (std::abs(tr) < 1e-10)
      throw std::runtime_error(
          "steady_state: kernel element is traceless; generator is not a "
          "physical Lindbladian");
    rho /= tr;
    if (relative_residual(liouvillian, rho) > 1e-8)
      throw std::runtime_error(
          "steady_state: kernel solve failed the stationarity residual check");
    return {std::move(rho), ground_dim};
  }

  if (!rho0)
    throw std::invalid_argument(
        "steady_state: initial condition required (Liouvillian kernel is " +
        std::to_string(kernel_dim) + "-dimensional)");

  if (liouvillian.decay_scale <= 0.0) {
    if (relative_residual(liouvillian, rho0->matrix()) <= 1e-8) return *rho0;
    throw std::runtime_error(
        "steady_state: no dissipative scale; evolution cannot converge from "
        "this initial state");
  }

  // Long-time limit by evolution: with several dark states the endpoint
  // depends on the initial state and on how decay redistributes the bright
  // population, so a kernel projection would be wrong.
  const double chunk = 5.0 / liouvillian.decay_scale;
  const double t_max = 1e5 / liouvillian.decay_scale;
  DensityMatrix current = *rho0;
  double t = 0.0;
  double last_delta = std::numeric_limits<double>::infinity();
  while (t < t_max) {
    DensityMatrix next = evolve(current, liouvillian, chunk, 1e-12);
    last_delta = (next.matrix() - current.matrix()).cwiseAbs().maxCoeff();
    current = std::move(next);
    t += chunk;
    if (last_delta < 1e-10 &&
        relative_residual(liouvillian, current.matrix()) <= 1e-8)
      return current;
  }
  throw std::runtime_error(
      "steady_state: evolution had not converged by t = " + std::to_string(t_max) +
      " (last max-norm change " + std::to_string(last_delta) + ")");
}

}  // namespace zeemanopt
