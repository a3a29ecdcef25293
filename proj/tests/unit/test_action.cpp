#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qhj/action.hpp"
#include "qhj/formulas.hpp"

using namespace qhj;
constexpr double kPi = std::numbers::pi;

TEST_CASE("classical action against frozen quadrature values") {
  CHECK(classical_action(PotentialModel::harmonic(1.0), 2.5) == doctest::Approx(2.5 * kPi).epsilon(1e-12));
  CHECK(classical_action(PotentialModel::cot_squared(1.0, kPi), 7.0) ==
        doctest::Approx(oracle::kPiFourMinusRootTwo).epsilon(1e-12));
  CHECK(classical_action(PotentialModel::coulomb(1.0, 1), -1.0 / 32.0) ==
        doctest::Approx(oracle::kPiFourMinusRootTwo).epsilon(1e-12));
  CHECK(classical_action(PotentialModel::coulomb(1.0, 0), -0.5) == doctest::Approx(oracle::kCoulombS).epsilon(1e-12));
  CHECK(classical_action(PotentialModel::morse(32.0, 1.0), -20.0) ==
        doctest::Approx(oracle::kMorseActionAtMinus20).epsilon(1e-12));
  CHECK(classical_action(PotentialModel::quartic(1.0), 0.667986) ==
        doctest::Approx(oracle::kQuarticActionAt0667986).epsilon(1e-11));
}

TEST_CASE("action slope is the derivative of the action") {
  const auto q = PotentialModel::quartic(1.0);
  const double E = 3.0;
  const double h = 1e-5;
  const double fd = (classical_action(q, E + h) - classical_action(q, E - h)) / (2.0 * h);
  CHECK(classical_action_slope(q, E) == doctest::Approx(fd).epsilon(1e-8));
  // Harmonic: dI/dE = pi / omega
  CHECK(classical_action_slope(PotentialModel::harmonic(2.0), 1.0) == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("semiclassical levels") {
  CHECK(wkb_energy(PotentialModel::harmonic(1.0), 2) == doctest::Approx(2.5).epsilon(1e-12));
  for (int n = 0; n < 5; ++n) {
    CHECK(wkb_energy(PotentialModel::quartic(1.0), n) == doctest::Approx(oracle::kQuarticWkb[n]).epsilon(1e-11));
  }
  CHECK(wkb_energy(PotentialModel::coulomb(1.0, 1), 0) == doctest::Approx(oracle::kHydrogenWkbL1).epsilon(1e-11));
  // Hydrogen l = 0: (n_r + 1/2) pi = pi / sqrt(-2E)
  CHECK(wkb_energy(PotentialModel::coulomb(1.0, 0), 0) == doctest::Approx(-2.0).epsilon(1e-11));
}

TEST_CASE("levels beyond the Morse continuum do not exist") {
  const auto m = PotentialModel::morse(32.0, 1.0);
  CHECK(wkb_energy(m, 7) < 0.0);
  CHECK_THROWS_AS(wkb_energy(m, 8), NoSuchLevelError);
}

TEST_CASE("corrected rule and the action-difference residual") {
  const auto h = PotentialModel::harmonic(1.0);
  CHECK(corrected_energy(h, 2, 0.0) == doctest::Approx(2.5).epsilon(1e-12));
  const auto c = PotentialModel::coulomb(1.0, 1);
  CHECK(corrected_energy(c, 2, 0.269506) == doctest::Approx(-0.03125).epsilon(1e-6));
  CHECK(residual_route_b(c, 2, -1.0 / 32.0) == doctest::Approx(oracle::kCentrifugalResidual[1]).epsilon(1e-9));
  CHECK(residual_route_b(PotentialModel::coulomb(1.0, 0), 0, -0.5) == doctest::Approx(kPi / 2).epsilon(1e-10));
  CHECK(residual_route_b(PotentialModel::quartic(1.0), 0, oracle::kQuarticLevels[0]) ==
        doctest::Approx(oracle::kQuarticResidual[0]).epsilon(1e-8));
  const auto w = PotentialModel::cot_squared(1.0, kPi);
  CHECK(corrected_energy(w, 2, 0.269506) == doctest::Approx(7.0).epsilon(1e-6));
}

TEST_CASE("round trip through the corrected rule") {
  const auto q = PotentialModel::quartic(1.0);
  for (int n = 0; n < 5; ++n) {
    const double R = residual_route_b(q, n, oracle::kQuarticLevels[n]);
    CHECK(corrected_energy(q, n, R) == doctest::Approx(oracle::kQuarticLevels[n]).epsilon(1e-12));
  }
}

TEST_CASE("action is increasing on an energy mesh") {
  const PotentialModel models[] = {PotentialModel::morse(32.0, 1.0), PotentialModel::coulomb(1.0, 2),
                                   PotentialModel::quartic(1.0)};
  const double lo[] = {-31.9, -0.08, 0.01};
  const double hi[] = {-0.01, -0.001, 50.0};
  for (int k = 0; k < 3; ++k) {
    double prev = -1.0;
    for (int i = 0; i < 50; ++i) {
      const double E = lo[k] + (hi[k] - lo[k]) * i / 49.0;
      const double I = classical_action(models[k], E);
      CHECK(I > prev);
      prev = I;
    }
  }
}
