#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qhj/potentials.hpp"

using namespace qhj;

TEST_CASE("potential values and derivatives") {
  const auto h = PotentialModel::harmonic(2.0);
  CHECK(h(1.5) == doctest::Approx(0.5 * 4.0 * 2.25));
  CHECK(h.derivative(1.5) == doctest::Approx(4.0 * 1.5));

  const auto m = PotentialModel::morse(32.0, 1.0);
  CHECK(m(0.0) == doctest::Approx(-32.0));
  CHECK(m.derivative(0.0) == doctest::Approx(0.0));
  CHECK(m.minimum_value() == -32.0);

  const auto c = PotentialModel::coulomb(1.0, 1);
  CHECK(c(2.0) == doctest::Approx(-0.5 + 1.0 / 4.0));
  CHECK(c.minimum_location() == doctest::Approx(2.0));
  CHECK(c.minimum_value() == doctest::Approx(-0.25));
  CHECK(std::isinf(PotentialModel::coulomb(1.0, 0).minimum_value()));

  const auto q = PotentialModel::quartic(2.0);
  CHECK(q(2.0) == doctest::Approx(8.0));
  CHECK(q(-1.0) > 0.0);
}

TEST_CASE("derivatives agree with central differences") {
  const double step = 1e-5;
  const PotentialModel models[] = {PotentialModel::harmonic(1.3), PotentialModel::morse(32.0, 1.0),
                                   PotentialModel::coulomb(1.0, 2), PotentialModel::cot_squared(1.0, std::numbers::pi),
                                   PotentialModel::quartic(1.0)};
  const double xs[] = {0.3, -0.2, 1.7, 0.9, 0.8};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& v = models[i];
    const double x = xs[i];
    const double fd = (v(x + step) - v(x - step)) / (2.0 * step);
    CHECK(v.derivative(x) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("domain violations throw") {
  const auto c = PotentialModel::coulomb(1.0, 1);
  CHECK_THROWS_AS(c(0.0), DomainError);
  CHECK_THROWS_AS(c(-1.0), DomainError);
  const auto w = PotentialModel::cot_squared(1.0, 2.0);
  CHECK_THROWS_AS(w(0.0), DomainError);
  CHECK_THROWS_AS(w(2.0), DomainError);
  CHECK_NOTHROW(w(1.0));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(PotentialModel::harmonic(0.0), std::invalid_argument);
  CHECK_THROWS_AS(PotentialModel::morse(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(PotentialModel::coulomb(1.0, -1), std::invalid_argument);
  CHECK_THROWS_AS(PotentialModel::quartic(1.0, {0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_model("harmonic", {{"a", 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_model("hydrogen", {{"l", 1.5}}), std::invalid_argument);
  CHECK_THROWS_AS(make_model("square", {}), std::invalid_argument);
  const auto m = make_model("morse", {{"V0", 10.0}, {"a", 0.5}, {"hbar", 2.0}});
  CHECK(m.as<MorseParams>().V0 == 10.0);
  CHECK(m.hbar() == 2.0);
  CHECK(m.describe() == "V0=10;a=0.5;hbar=2");
}

TEST_CASE("turning points solve V = E") {
  const PotentialModel models[] = {PotentialModel::harmonic(1.0), PotentialModel::morse(32.0, 1.0),
                                   PotentialModel::coulomb(1.0, 3), PotentialModel::cot_squared(1.0, std::numbers::pi),
                                   PotentialModel::quartic(0.5)};
  const double energies[] = {2.5, -15.125, -0.02, 7.0, 3.0};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto tp = turning_points(models[i], energies[i]);
    CHECK(tp.x1 < tp.x2);
    CHECK(models[i](tp.x1) == doctest::Approx(energies[i]).epsilon(1e-12));
    CHECK(models[i](tp.x2) == doctest::Approx(energies[i]).epsilon(1e-12));
  }
  const auto s = turning_points(PotentialModel::coulomb(1.0, 0), -0.5);
  CHECK(s.x1_is_boundary);
  CHECK(s.x2 == doctest::Approx(2.0));
}

TEST_CASE("no classical region") {
  CHECK_THROWS_AS(turning_points(PotentialModel::harmonic(1.0), -1.0), NoTurningPointsError);
  CHECK_THROWS_AS(turning_points(PotentialModel::morse(32.0, 1.0), 0.5), NoTurningPointsError);
  CHECK_THROWS_AS(turning_points(PotentialModel::morse(32.0, 1.0), -40.0), NoTurningPointsError);
  CHECK_THROWS_AS(turning_points(PotentialModel::coulomb(1.0, 1), -0.3), NoTurningPointsError);
}

TEST_CASE("classical momentum") {
  const auto h = PotentialModel::harmonic(1.0);
  CHECK(classical_momentum(h, 2.5, 1.0) == doctest::Approx(2.0));
  CHECK(classical_momentum(h, 2.5, std::sqrt(5.0)) == doctest::Approx(0.0));
  CHECK_THROWS_AS(classical_momentum(h, 2.5, 3.0), ForbiddenRegionError);
}
