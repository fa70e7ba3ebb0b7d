#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_helpers.hpp"
#include "zeemanopt/dml.hpp"
#include "zeemanopt/lindblad.hpp"

using namespace zeemanopt;
using zeemanopt::testing::max_abs_diff;

namespace {

HalfInteger hi(int v) { return HalfInteger::from_int(v); }

TransitionScheme j1j2(double omega, double delta = 0.0, double gamma = 1.0) {
  return {hi(1), hi(2), gamma, omega, delta};
}

DmlScenario baseline_scenario(double density = 1e16, double length = 0.1) {
  return {j1j2(1.0), density, length, 1e-3, 795e-9, Direction::Forward};
}

// Ground manifold uniformly filled, excited empty.
DensityMatrix thermal_state() {
  const TransitionScheme scheme = j1j2(1.0);
  return DensityMatrix::ground_mixed(scheme);
}

}  // namespace

TEST_CASE("pumped steady state of the J=1 -> J'=2 system") {
  SUBCASE("weak pump limit returns the unpolarized ground manifold") {
    const DensityMatrix rho = pump_steady_state_j1j2(1e-6, 0.0, 1.0);
    CHECK(rho.excited_population() <= 1e-10);
    const Eigen::VectorXd ground = rho.ground_populations();
    for (int i = 0; i < 3; ++i)
      CHECK(ground(i) == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  }

  SUBCASE("m -> -m reflection symmetry of the z-pumped state") {
    const DensityMatrix rho = pump_steady_state_j1j2(1.0, 0.0, 1.0);
    const Eigen::VectorXd ground = rho.ground_populations();
    const Eigen::VectorXd excited = rho.excited_populations();
    CHECK(std::abs(ground(0) - ground(2)) < 1e-10);
    CHECK(std::abs(excited(0) - excited(4)) < 1e-10);
    CHECK(std::abs(excited(1) - excited(3)) < 1e-10);
  }

  SUBCASE("kernel solve agrees with long-time evolution") {
    const DensityMatrix direct = pump_steady_state_j1j2(1.0, 0.0, 1.0);
    const Liouvillian liou =
        build_liouvillian(j1j2(1.0), PolarizationVector::linear_z());
    const DensityMatrix evolved = evolve(thermal_state(), liou, 400.0);
    CHECK(max_abs_diff(direct.matrix(), evolved.matrix()) < 1e-8);
  }

  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(pump_steady_state_j1j2(0.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(pump_steady_state_j1j2(1.0, 0.0, 0.0), std::invalid_argument);
  }
}

TEST_CASE("probe gain") {
  SUBCASE("unpumped gas absorbs the probe") {
    const GainReport report = probe_gain(baseline_scenario(), thermal_state());
    CHECK(report.gain < 0.0);
    CHECK(report.gain_length == report.gain * 0.1);
    CHECK(!report.lases);
    // All inversions are -1/3, the weights sum to one, so g = -n sigma0 / 3.
    const double expected = -1e16 * report.sigma0 / 3.0;
    CHECK(report.gain == doctest::Approx(expected).epsilon(1e-12));
  }

  SUBCASE("gain is linear in the density") {
    const DensityMatrix rho = pump_steady_state_j1j2(1.0, 0.0, 1.0);
    const GainReport single = probe_gain(baseline_scenario(1e16), rho);
    const GainReport doubled = probe_gain(baseline_scenario(2e16), rho);
    CHECK(std::abs(doubled.gain - 2.0 * single.gain) <=
          1e-12 * std::abs(doubled.gain));
  }

  SUBCASE("normalized CG^2 weights sum to one and are symmetric") {
    const GainReport report = probe_gain(baseline_scenario(), thermal_state());
    REQUIRE(report.per_transition.size() == 6);
    double total = 0.0;
    for (const auto& t : report.per_transition) {
      total += t.weight;
      CHECK(t.m_e == t.m_g + 1 + (t.m_e - t.m_g - 1));  // m_e - m_g = +-1
      CHECK(std::abs(t.m_e - t.m_g) == 1);
    }
    CHECK(std::abs(total - 1.0) < 1e-12);
    // Frozen values: CG^2 = {1, 1/6, 1/2, 1/2, 1/6, 1} over sum 10/3.
    auto weight_of = [&](int mg, int me) {
      for (const auto& t : report.per_transition)
        if (t.m_g == mg && t.m_e == me) return t.weight;
      return -1.0;
    };
    CHECK(weight_of(-1, -2) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(weight_of(-1, 0) == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(weight_of(0, -1) == doctest::Approx(0.15).epsilon(1e-12));
    CHECK(weight_of(0, 1) == doctest::Approx(0.15).epsilon(1e-12));
    CHECK(weight_of(1, 0) == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(weight_of(1, 2) == doctest::Approx(0.3).epsilon(1e-12));
  }

  SUBCASE("q = +1 and q = -1 contributions are equal for the pumped state") {
    const DensityMatrix rho = pump_steady_state_j1j2(1.0, 0.0, 1.0);
    const GainReport report = probe_gain(baseline_scenario(), rho);
    double plus = 0.0, minus = 0.0;
    for (const auto& t : report.per_transition) {
      if (t.m_e - t.m_g == 1) plus += t.weight * t.inversion;
      else minus += t.weight * t.inversion;
    }
    CHECK(std::abs(plus - minus) < 1e-10);
  }

  SUBCASE("forward and backward reports differ only in the label") {
    const DensityMatrix rho = pump_steady_state_j1j2(1.0, 0.0, 1.0);
    DmlScenario forward = baseline_scenario();
    DmlScenario backward{j1j2(1.0), 1e16, 0.1, 1e-3, 795e-9, Direction::Backward};
    const GainReport f = probe_gain(forward, rho);
    const GainReport b = probe_gain(backward, rho);
    CHECK(f.gain == b.gain);
    CHECK(f.gain_length == b.gain_length);
    CHECK(f.lases == b.lases);
    CHECK(to_string(f.direction) == "forward");
    CHECK(to_string(b.direction) == "backward");
  }

  SUBCASE("weak pumping tends continuously to the unpumped absorption") {
    const GainReport unpumped = probe_gain(baseline_scenario(), thermal_state());
    const DensityMatrix weak = pump_steady_state_j1j2(1e-3, 0.0, 1.0);
    const GainReport nearly = probe_gain(baseline_scenario(), weak);
    CHECK(std::abs(nearly.gain - unpumped.gain) <= 1e-3 * std::abs(unpumped.gain));
  }

  SUBCASE("mismatched state dimensions are rejected") {
    const TransitionScheme wrong(hi(1), hi(0), 1.0, 1.0);
    const DensityMatrix rho = DensityMatrix::ground_mixed(wrong);
    CHECK_THROWS_AS(probe_gain(baseline_scenario(), rho), std::domain_error);
  }

  SUBCASE("scenario validation") {
    CHECK_THROWS_AS(DmlScenario(TransitionScheme(hi(1), hi(0), 1.0, 1.0), 1e16,
                                0.1, 1e-3, 795e-9, Direction::Forward),
                    std::domain_error);
    CHECK_THROWS_AS(DmlScenario(j1j2(1.0), -1.0, 0.1, 1e-3, 795e-9,
                                Direction::Forward),
                    std::domain_error);
    CHECK_THROWS_AS(direction_from_string("sideways"), std::domain_error);
  }
}

TEST_CASE("threshold scan") {
  ScanGrid grid;
  grid.omega = {0.5, 1.0};
  grid.delta = {0.0};
  grid.density = {1e-20, 1e16, 1e18};
  grid.length = {0.05, 0.1};
  grid.gamma = 1.0;
  grid.radius = 1e-3;
  grid.wavelength = 795e-9;

  const auto rows = threshold_scan(grid, 30.0);
  REQUIRE(rows.size() == 2 * 1 * 3 * 2);

  SUBCASE("grid iteration order is omega, delta, density, length") {
    CHECK(rows[0].omega == 0.5);
    CHECK(rows[0].density == 1e-20);
    CHECK(rows[0].length == 0.05);
    CHECK(rows[1].length == 0.1);
    CHECK(rows[2].density == 1e16);
    CHECK(rows.back().omega == 1.0);
    CHECK(rows.back().density == 1e18);
    CHECK(rows.back().length == 0.1);
  }

  SUBCASE("vanishing density rows cannot lase") {
    for (const auto& row : rows) {
      if (row.density == 1e-20) {
        CHECK(std::abs(row.report.gain_length) < 1e-10);
        CHECK(!row.report.lases);
      }
    }
  }

  SUBCASE("each row is internally consistent") {
    for (const auto& row : rows) {
      CHECK(row.report.gain_length == row.report.gain * row.length);
      CHECK(row.report.lases == (row.report.gain_length >= 30.0));
    }
  }

  SUBCASE("gain does not depend on the cell length; |gL| grows with it") {
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
      CHECK(rows[i].report.gain == rows[i + 1].report.gain);
      CHECK(std::abs(rows[i].report.gain_length) <=
            std::abs(rows[i + 1].report.gain_length));
    }
  }

  SUBCASE("an empty axis is rejected") {
    ScanGrid bad = grid;
    bad.delta.clear();
    CHECK_THROWS_AS(threshold_scan(bad, 30.0), std::invalid_argument);
  }
}
