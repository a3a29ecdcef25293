#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qhj/errors.hpp"
#include "qhj/formulas.hpp"
#include "qhj/qhje.hpp"

using namespace qhj;
constexpr double kPi = std::numbers::pi;

TEST_CASE("amplitude for a constant wave number") {
  const double k = 2.0;
  std::vector<double> xs;
  for (int i = 0; i <= 40; ++i) xs.push_back(0.1 * i);

  const double rho_eq = 1.0 / std::sqrt(k);
  const auto flat = integrate_amplitude([&](double) { return k * k; }, 0.0, rho_eq, 0.0, xs);
  for (const auto& s : flat) CHECK(s[0] == doctest::Approx(rho_eq).epsilon(1e-9));

  // rho^2 = cos^2 kx + sin^2 kx / k^2 for rho(0) = 1, rho'(0) = 0
  const auto wavy = integrate_amplitude([&](double) { return k * k; }, 0.0, 1.0, 0.0, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double c = std::cos(k * xs[i]);
    const double s = std::sin(k * xs[i]);
    CHECK(wavy[i][0] * wavy[i][0] == doctest::Approx(c * c + s * s / (k * k)).epsilon(1e-8));
  }
}

TEST_CASE("quantization integral at exact levels") {
  for (int n = 0; n < 4; ++n) {
    const auto f = qhj_fields(PotentialModel::harmonic(1.0), n + 0.5);
    CHECK(quantum_action_integral(f) == doctest::Approx((n + 0.5) * kPi).epsilon(1e-8));
    CHECK(node_count(f) == n);
  }
  const auto c = qhj_fields(PotentialModel::coulomb(1.0, 1), -1.0 / 32.0);
  CHECK(quantum_action_integral(c) == doctest::Approx(2.5 * kPi).epsilon(1e-8));
  const auto s = qhj_fields(PotentialModel::coulomb(1.0, 0), -0.125);
  CHECK(quantum_action_integral(s) == doctest::Approx(1.5 * kPi).epsilon(1e-8));
  CHECK(node_count(s) == 1);
  const auto q = qhj_fields(PotentialModel::quartic(1.0), oracle::kQuarticLevels[2]);
  CHECK(quantum_action_integral(q) == doctest::Approx(2.5 * kPi).epsilon(1e-8));
}

TEST_CASE("field identities") {
  const auto f = qhj_fields(PotentialModel::quartic(1.0), oracle::kQuarticLevels[3]);
  const std::size_t N = f.x.size();
  REQUIRE(N == 2001);
  const double h = f.x[1] - f.x[0];
  double worst_y = 0.0;
  double worst_fd = 0.0;
  double worst_g = 0.0;
  for (std::size_t i = 2; i + 2 < N; ++i) {
    worst_y = std::max(worst_y, std::abs(f.Y[i] - 0.5 * std::log(f.Xp[i])));
    const double fd = (f.Xp[i - 2] - 8.0 * f.Xp[i - 1] + 8.0 * f.Xp[i + 1] - f.Xp[i + 2]) / (12.0 * h);
    worst_fd = std::max(worst_fd, std::abs(fd - f.Xpp[i]) / (1.0 + std::abs(f.Xpp[i])));
    if (std::abs(f.F[i]) < 1e-3) {
      const double expected = f.F[i] / 2.0 - f.F[i] * f.F[i] / 8.0;
      worst_g = std::max(worst_g, std::abs(f.G[i] - expected));
    }
  }
  CHECK(worst_y < 1e-14);
  CHECK(worst_fd < 1e-4);
  CHECK(worst_g < 1e-9);
  CHECK_FALSE(f.undefined_at);

  const auto hj = hamilton_jacobi_residual(f);
  CHECK(*std::max_element(hj.begin(), hj.end(), [](double a, double b) { return std::abs(a) < std::abs(b); }) <
        1e-8);
}

TEST_CASE("X' meets the classical momentum where F vanishes") {
  const auto model = PotentialModel::quartic(1.0);
  const double E = oracle::kQuarticLevels[4];
  const auto f = qhj_fields(model, E);
  const auto zeros = f_zeros(f);
  REQUIRE_FALSE(zeros.empty());
  for (double z : zeros) {
    const auto s = f.solution->at(z);
    CHECK(1.0 / (s.rho * s.rho) == doctest::Approx(classical_momentum(model, E, z)).epsilon(1e-8));
  }
}

TEST_CASE("classical limits of the fields") {
  const auto f = qhj_fields(PotentialModel::harmonic(1.0), 2.5);
  // W_classical ends at I(E) / 1 near x2, X ends at the quantum action
  CHECK(f.W_classical.back() == doctest::Approx(2.5 * kPi).epsilon(1e-3));
  CHECK(f.X.front() == doctest::Approx(0.0).epsilon(1e-2));
  for (std::size_t i = 1; i < f.X.size(); ++i) CHECK(f.X[i] > f.X[i - 1]);
}

TEST_CASE("route-A residual") {
  const auto h = qhj_fields(PotentialModel::harmonic(1.0), 3.5);
  const auto rh = residual_route_a(h, h.model);
  CHECK(std::abs(rh.R) < 1e-7);
  CHECK(std::abs(rh.R_difference) < 1e-7);

  const auto c = qhj_fields(PotentialModel::coulomb(1.0, 1), -1.0 / 18.0);
  const auto rc = residual_route_a(c, c.model);
  CHECK(rc.R == doctest::Approx(hydrogen_R_closed(1)).epsilon(1e-7));
  CHECK(rc.R_difference == doctest::Approx(hydrogen_R_closed(1)).epsilon(1e-7));

  const auto q = qhj_fields(PotentialModel::quartic(1.0), oracle::kQuarticLevels[0]);
  CHECK(residual_route_a(q, q.model).R == doctest::Approx(oracle::kQuarticResidual[0]).epsilon(1e-7));
}

TEST_CASE("wave function reconstruction") {
  const auto model = PotentialModel::morse(32.0, 1.0);
  const auto state = eigenstate(model, 2);
  const auto f = qhj_fields(model, state.E);
  const auto psi = reconstruct_wavefunction(f, state);
  const auto ref = interpolate_state(state, f.x);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    num = std::max(num, std::abs(psi[i] - ref[i]));
    den = std::max(den, std::abs(ref[i]));
  }
  CHECK(num / den < 1e-6);
  const auto again = reconstruct_wavefunction(f);
  CHECK(again.size() == psi.size());
  CHECK(again[psi.size() / 3] == doctest::Approx(psi[psi.size() / 3]).epsilon(1e-6));
}

TEST_CASE("quantization through the quantum action") {
  CHECK(quantize_via_qhj(PotentialModel::harmonic(1.0), 2) == doctest::Approx(2.5).epsilon(1e-6));
  CHECK(quantize_via_qhj(PotentialModel::quartic(1.0), 1) == doctest::Approx(oracle::kQuarticLevels[1]).epsilon(1e-6));
  CHECK(quantize_via_qhj(PotentialModel::morse(32.0, 1.0), 0) == doctest::Approx(-28.125).epsilon(1e-6));
  CHECK(quantize_via_qhj(PotentialModel::coulomb(1.0, 2), 1) == doctest::Approx(-0.5 / 16).epsilon(1e-6));
}

TEST_CASE("milne amplitude on a grid") {
  const auto model = PotentialModel::harmonic(1.0);
  const Grid g{-1.0, 1.0, 21};
  const auto rho = milne_amplitude(model, 0.5, g);
  REQUIRE(rho.size() == 21);
  for (double r : rho) CHECK(r > 0.0);
  const MilneSolution sol(model, 0.5);
  CHECK(sol.action() == doctest::Approx(0.5 * kPi).epsilon(1e-9));
  CHECK(sol.phase_offset() == doctest::Approx(kPi / 4));
  CHECK(sol.at(0.3).rho == doctest::Approx(rho[13]).epsilon(1e-9));
}

TEST_CASE("G vanishes linearly at the zeros of F") {
  const auto model = PotentialModel::morse(32.0, 1.0);
  const double E = -0.5 * 5.5 * 5.5;
  const auto f = qhj_fields(model, E);
  const auto F_at = [&](double x) {
    const auto s = f.solution->at(x);
    return model.wave_number_squared(E, x) * std::pow(s.rho, 4) - 1.0;
  };
  const auto zeros = f_zeros(f);
  REQUIRE_FALSE(zeros.empty());
  for (double x0 : zeros) {
    const double d = 1e-5;
    const double slope = (F_at(x0 + d) - F_at(x0 - d)) / (2.0 * d);
    const auto error = [&](double dx) {
      const double G = std::sqrt(1.0 + F_at(x0 + dx)) - 1.0;
      return std::abs(G - 0.5 * slope * dx);
    };
    const double big = 1e-3;
    const double small = 1e-4;
    const double order = std::log(error(big) / error(small)) / std::log(big / small);
    CAPTURE(x0);
    CHECK(order >= 1.9);
  }
}
