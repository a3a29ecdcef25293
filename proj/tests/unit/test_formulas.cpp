#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qhj/action.hpp"
#include "qhj/formulas.hpp"

using namespace qhj;
constexpr double kPi = std::numbers::pi;

TEST_CASE("harmonic and Morse closed forms") {
  const auto t = closed_form_energies(PotentialModel::harmonic(1.0), 2);
  CHECK(t.E_wkb == doctest::Approx(2.5));
  REQUIRE(t.E_exact);
  CHECK(*t.E_exact == doctest::Approx(2.5));
  CHECK_FALSE(t.E_corrected);

  const auto m = closed_form_energies(PotentialModel::morse(32.0, 1.0), 0, 0.0);
  CHECK(m.E_wkb == doctest::Approx(-28.125).epsilon(1e-14));
  CHECK(*m.E_corrected == m.E_wkb);
}

TEST_CASE("hydrogen indices and corrected level") {
  const auto c = PotentialModel::coulomb(1.0, 1);
  const auto t = closed_form_energies(c, 2, 0.269506);
  CHECK(*t.indices.radial == 2);
  CHECK(*t.indices.azimuthal == 1);
  CHECK(*t.indices.principal == 4);
  CHECK(*t.E_exact == doctest::Approx(-0.03125));
  CHECK(*t.E_corrected == doctest::Approx(-0.03125).epsilon(1e-6));
  const auto exact_R = closed_form_energies(c, 2, hydrogen_R_closed(1));
  CHECK(*exact_R.E_corrected == doctest::Approx(-0.03125).epsilon(1e-13));
  CHECK(t.E_wkb == doctest::Approx(-0.5 / std::pow(2.5 + std::sqrt(2.0), 2)));
}

TEST_CASE("centrifugal residual") {
  for (int l = 0; l < 6; ++l) {
    CHECK(hydrogen_R_closed(l) == doctest::Approx(oracle::kCentrifugalResidual[l]).epsilon(1e-9));
  }
}

TEST_CASE("cot^2 exact index and lambda") {
  const auto w = PotentialModel::cot_squared(1.0, kPi);
  CHECK(cot_squared_lambda(w) == doctest::Approx(0.5));
  const auto t = closed_form_energies(w, 2, hydrogen_R_closed(1));
  CHECK(*t.indices.exact_index == 3);
  CHECK(*t.E_exact == doctest::Approx(7.0));
  CHECK(*t.E_corrected == doctest::Approx(7.0).epsilon(1e-13));
}

TEST_CASE("quartic closed form matches the quadrature pipeline") {
  const auto q = PotentialModel::quartic(1.0);
  for (int n = 0; n < 5; ++n) {
    const auto t = closed_form_energies(q, n);
    CHECK_FALSE(t.E_exact);
    CHECK(t.E_wkb == doctest::Approx(oracle::kQuarticWkb[n]).epsilon(1e-12));
  }
  const auto c = closed_form_energies(q, 3, oracle::kQuarticResidual[3]);
  CHECK(*c.E_corrected == doctest::Approx(oracle::kQuarticLevels[3]).epsilon(1e-9));
  // x -> a^(1/6) x: every level scales as a^(-1/3)
  const auto q8 = PotentialModel::quartic(8.0);
  CHECK(closed_form_energies(q8, 1).E_wkb == doctest::Approx(0.5 * oracle::kQuarticWkb[1]).epsilon(1e-12));
  CHECK(wkb_energy(q8, 1) == doctest::Approx(0.5 * oracle::kQuarticWkb[1]).epsilon(1e-10));
}

TEST_CASE("closed-form actions") {
  CHECK(classical_action_closed(PotentialModel::harmonic(1.0), 2.5) == doctest::Approx(2.5 * kPi));
  CHECK(classical_action_closed(PotentialModel::cot_squared(1.0, kPi), 7.0) ==
        doctest::Approx(oracle::kPiFourMinusRootTwo).epsilon(1e-14));
  CHECK(classical_action_closed(PotentialModel::coulomb(1.0, 1), -1.0 / 32.0) ==
        doctest::Approx(oracle::kPiFourMinusRootTwo).epsilon(1e-14));
  CHECK(classical_action_closed(PotentialModel::morse(32.0, 1.0), -20.0) ==
        doctest::Approx(oracle::kMorseActionAtMinus20).epsilon(1e-14));
  CHECK(classical_action_closed(PotentialModel::quartic(1.0), 0.667986) ==
        doctest::Approx(oracle::kQuarticActionAt0667986).epsilon(1e-13));
  CHECK_THROWS_AS(classical_action_closed(PotentialModel::harmonic(1.0), -1.0), NoTurningPointsError);
}

TEST_CASE("general units") {
  const Units u{0.5, 3.0};
  const auto h = PotentialModel::harmonic(2.0, u);
  // E = (n + 1/2) hbar omega
  CHECK(closed_form_energies(h, 3).E_wkb == doctest::Approx(3.5));
  CHECK(wkb_energy(h, 3) == doctest::Approx(3.5).epsilon(1e-12));
  const auto c = PotentialModel::coulomb(2.0, 0, u);
  // E = -m e^4 / (2 hbar^2 N^2)
  CHECK(*closed_form_energies(c, 1).E_exact == doctest::Approx(-3.0 * 4.0 / (2.0 * 0.25 * 4.0)));
  const auto q = PotentialModel::quartic(1.7, u);
  CHECK(closed_form_energies(q, 2).E_wkb == doctest::Approx(wkb_energy(q, 2)).epsilon(1e-10));
}
