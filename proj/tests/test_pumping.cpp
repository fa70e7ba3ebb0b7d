#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_helpers.hpp"
#include "zeemanopt/density_matrix.hpp"
#include "zeemanopt/lindblad.hpp"
#include "zeemanopt/pumping.hpp"

using namespace zeemanopt;
using zeemanopt::testing::max_abs_diff;

namespace {

HalfInteger hi(int v) { return HalfInteger::from_int(v); }

Eigen::MatrixXcd mixed_ground(int dim) {
  return Eigen::MatrixXcd::Identity(dim, dim) / double(dim);
}

// Projector onto the span of the given vectors.
Eigen::MatrixXcd projector(const std::vector<Eigen::VectorXcd>& basis, int dim) {
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& v : basis) p += v * v.adjoint();
  return p;
}

}  // namespace

TEST_CASE("dark states") {
  const TransitionScheme scheme(hi(1), hi(0), 1.0, 1.0);

  SUBCASE("x polarization: two dark states spanning m=0 and (|-1>+|+1>)/sqrt2") {
    const auto basis = dark_states(scheme, PolarizationVector::linear_x());
    REQUIRE(basis.size() == 2);
    // Orthonormality.
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        CHECK(std::abs(basis[i].dot(basis[j]) - (i == j ? 1.0 : 0.0)) < 1e-12);

    const Eigen::MatrixXcd p = projector(basis, 3);
    Eigen::VectorXcd symmetric(3);
    symmetric << std::sqrt(0.5), 0.0, std::sqrt(0.5);
    CHECK(std::abs((symmetric.adjoint() * p * symmetric)(0, 0).real() - 1.0) < 1e-10);
    Eigen::VectorXcd m0 = Eigen::VectorXcd::Zero(3);
    m0(1) = 1.0;
    CHECK(std::abs((m0.adjoint() * p * m0)(0, 0).real() - 1.0) < 1e-10);
  }

  SUBCASE("z polarization: the |m|=1 sublevels are dark") {
    const auto basis = dark_states(scheme, PolarizationVector::linear_z());
    REQUIRE(basis.size() == 2);
    const Eigen::MatrixXcd p = projector(basis, 3);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(3, 3);
    expected(0, 0) = 1.0;
    expected(2, 2) = 1.0;
    CHECK(max_abs_diff(p, expected) < 1e-10);
  }

  SUBCASE("J=1 -> J'=2 with z polarization has no dark states") {
    const TransitionScheme open(hi(1), hi(2), 1.0, 1.0);
    CHECK(dark_states(open, PolarizationVector::linear_z()).empty());
  }

  SUBCASE("sigma+ light on J=1 -> J'=0 leaves m=0 and m=+1 dark") {
    const auto basis = dark_states(scheme, PolarizationVector::sigma_plus());
    REQUIRE(basis.size() == 2);
    const Eigen::MatrixXcd p = projector(basis, 3);
    CHECK(std::abs(p(0, 0).real()) < 1e-10);  // m=-1 couples via q=+1
    CHECK(p(1, 1).real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(p(2, 2).real() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("pumping endpoints") {
  const TransitionScheme scheme(hi(1), hi(0), 1.0, 1.0);

  SUBCASE("x polarization from the unpolarized state gives (1/4, 1/2, 1/4)") {
    const PumpingReport report =
        run_pumping(scheme, PolarizationVector::linear_x(), mixed_ground(3));
    CHECK(report.final_ground_populations(0) == doctest::Approx(0.25).epsilon(1e-6));
    CHECK(report.final_ground_populations(1) == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(report.final_ground_populations(2) == doctest::Approx(0.25).epsilon(1e-6));
    CHECK(std::abs(report.final_ground_populations.sum() - 1.0) < 1e-8);
    CHECK(report.consistency_residual < 1e-6);
    CHECK(report.time_to_completion > 0.0);

    // Far from both rejected candidate answers.
    const auto answers = naive_answers();
    for (int k = 0; k < 2; ++k) {
      double max_diff = 0.0;
      for (int i = 0; i < 3; ++i)
        max_diff = std::max(max_diff,
                            std::abs(report.final_ground_populations(i) -
                                     answers[k].populations[i]));
      CHECK(max_diff > 0.05);
    }
  }

  SUBCASE("z polarization from the unpolarized state gives (1/2, 0, 1/2)") {
    const PumpingReport report =
        run_pumping(scheme, PolarizationVector::linear_z(), mixed_ground(3));
    CHECK(report.final_ground_populations(0) == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(std::abs(report.final_ground_populations(1)) < 1e-6);
    CHECK(report.final_ground_populations(2) == doctest::Approx(0.5).epsilon(1e-6));
  }

  SUBCASE("a state already in the dark superposition does not move") {
    Eigen::VectorXcd dark(3);
    dark << std::sqrt(0.5), 0.0, std::sqrt(0.5);
    const Eigen::MatrixXcd rho_g0 = dark * dark.adjoint();
    const PumpingReport report =
        run_pumping(scheme, PolarizationVector::linear_x(), rho_g0);
    CHECK(report.time_to_completion == 0.0);
    CHECK(report.final_ground_populations(0) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(report.final_ground_populations(2) == doctest::Approx(0.5).epsilon(1e-9));
  }

  SUBCASE("endpoint is independent of the pump strength") {
    Eigen::VectorXd reference;
    for (const double omega : {0.1, 1.0, 10.0}) {
      const TransitionScheme s(hi(1), hi(0), 1.0, omega);
      const PumpingReport report =
          run_pumping(s, PolarizationVector::linear_x(), mixed_ground(3));
      if (reference.size() == 0) {
        reference = report.final_ground_populations;
      } else {
        CHECK((report.final_ground_populations - reference).cwiseAbs().maxCoeff() <
              1e-6);
      }
    }
  }

  SUBCASE("consistency residual stays small across schemes and polarizations") {
    for (const auto& pol :
         {PolarizationVector::linear_x(), PolarizationVector::linear_y(),
          PolarizationVector::linear_z(), PolarizationVector::sigma_plus()}) {
      const PumpingReport report = run_pumping(scheme, pol, mixed_ground(3));
      CHECK(report.consistency_residual < 1e-6);
    }
    // J=1 -> J'=1: z light cannot excite m = 0, so pumping collects there.
    const TransitionScheme j1j1(hi(1), hi(1), 1.0, 1.0);
    const PumpingReport report =
        run_pumping(j1j1, PolarizationVector::linear_z(), mixed_ground(3));
    CHECK(report.consistency_residual < 1e-6);
    CHECK(report.final_ground_populations(1) == doctest::Approx(1.0).epsilon(1e-6));
    // J=1/2 -> J'=1/2: sigma+ light pumps everything into the stretched state.
    const TransitionScheme half(HalfInteger::from_twice(1),
                                HalfInteger::from_twice(1), 1.0, 1.0);
    const PumpingReport stretched =
        run_pumping(half, PolarizationVector::sigma_plus(), mixed_ground(2));
    CHECK(stretched.consistency_residual < 1e-6);
    CHECK(stretched.final_ground_populations(1) ==
          doctest::Approx(1.0).epsilon(1e-6));
  }

  SUBCASE("input validation") {
    CHECK_THROWS_AS(
        run_pumping(scheme, PolarizationVector::linear_x(), mixed_ground(4)),
        std::domain_error);
    CHECK_THROWS_AS(
        run_pumping(scheme, PolarizationVector::linear_x(), 2.0 * mixed_ground(3)),
        std::domain_error);
    const TransitionScheme no_decay(hi(1), hi(0), 0.0, 1.0);
    CHECK_THROWS_AS(
        run_pumping(no_decay, PolarizationVector::linear_x(), mixed_ground(3)),
        std::domain_error);
  }
}

TEST_CASE("dark occupation never decreases during pumping") {
  const TransitionScheme scheme(hi(1), hi(0), 1.0, 1.0);
  const auto pol = PolarizationVector::linear_x();
  const Liouvillian liou = build_liouvillian(scheme, pol);
  const auto basis = dark_states(scheme, pol);
  REQUIRE(!basis.empty());

  DensityMatrix rho = DensityMatrix::ground_mixed(scheme);
  const double dt = 1.0;
  std::vector<double> occupation(basis.size(), 0.0);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Eigen::VectorXcd full = Eigen::VectorXcd::Zero(scheme.dim());
    full.head(3) = basis[k];
    occupation[k] = (full.adjoint() * rho.matrix() * full)(0, 0).real();
  }
  for (int step = 0; step < 100; ++step) {
    rho = evolve(rho, liou, dt);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Eigen::VectorXcd full = Eigen::VectorXcd::Zero(scheme.dim());
      full.head(3) = basis[k];
      const double now = (full.adjoint() * rho.matrix() * full)(0, 0).real();
      CHECK(now >= occupation[k] - 1e-8);
      occupation[k] = now;
    }
  }
  CHECK(rho.excited_population() < 1e-8);
}

TEST_CASE("candidate answers table") {
  const auto answers = naive_answers();
  CHECK(answers[0].populations == std::array<double, 3>{0.0, 1.0, 0.0});
  CHECK(answers[1].populations ==
        std::array<double, 3>{1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0});
  CHECK(answers[2].populations == std::array<double, 3>{0.25, 0.5, 0.25});
  CHECK(!answers[0].correct);
  CHECK(!answers[1].correct);
  CHECK(answers[2].correct);
}
