#include "boundary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qhj::detail {

bool has_wall(const PotentialModel& model, Side side) {
  switch (model.family()) {
    case Family::CotSquared:
      return true;
    case Family::CoulombCentrifugal:
      return side == Side::Left;
    default:
      return false;
  }
}

double wall_position(const PotentialModel& model, Side side) {
  if (model.family() == Family::CotSquared && side == Side::Right) {
    return model.as<CotSquaredParams>().a;
  }
  return 0.0;
}

StartData regular_series(const PotentialModel& model, double E, Side side, double offset) {
  const double m = model.mass();
  const double hb2 = model.hbar() * model.hbar();
  const double r = offset;
  double value = 0.0;
  double slope = 0.0;

  if (model.family() == Family::CoulombCentrifugal) {
    const auto& p = model.as<CoulombParams>();
    const int l = p.l;
    const double b1 = 2.0 * m * p.e2 / hb2;
    const double b2 = 2.0 * m * E / hb2;
    constexpr int kTerms = 10;
    double a[kTerms + 1] = {1.0};
    for (int k = 1; k <= kTerms; ++k) {
      const double am2 = k >= 2 ? a[k - 2] : 0.0;
      a[k] = (-b1 * a[k - 1] - b2 * am2) / (static_cast<double>(k) * (k + 2 * l + 1));
    }
    // u = r^{l+1} sum a_k r^k
    double poly = 0.0;
    double dpoly = 0.0;
    for (int k = kTerms; k >= 0; --k) {
      poly = poly * r + a[k];
    }
    for (int k = kTerms; k >= 1; --k) {
      dpoly = dpoly * r + k * a[k];
    }
    const double lead = std::pow(r, l + 1);
    value = lead * poly;
    slope = (l + 1) * std::pow(r, l) * poly + lead * dpoly;
    return {r, value, slope};
  }

  if (model.family() == Family::CotSquared) {
    const auto& p = model.as<CotSquaredParams>();
    const double alpha = std::numbers::pi / p.a;
    const double lambda = 2.0 * m * p.V0 / (hb2 * alpha * alpha);
    const double s = 0.5 + std::sqrt(0.25 + lambda);
    const double k0 = 2.0 * m / hb2 * (E + 2.0 * p.V0 / 3.0);
    const double k2 = -2.0 * m / hb2 * p.V0 * alpha * alpha / 15.0;
    const double c1 = -k0 / (2.0 * (2.0 * s + 1.0));
    const double c2 = (-k0 * c1 - k2) / (4.0 * (2.0 * s + 3.0));
    const double x2 = r * r;
    const double poly = 1.0 + c1 * x2 + c2 * x2 * x2;
    const double dpoly = 2.0 * c1 * r + 4.0 * c2 * x2 * r;
    const double lead = std::pow(r, s);
    value = lead * poly;
    slope = s * std::pow(r, s - 1.0) * poly + lead * dpoly;
    if (side == Side::Left) return {r, value, slope};
    return {p.a - r, value, -slope};
  }

  throw std::logic_error("regular_series: family has no wall");
}

double decay_margin(const PotentialModel& model, double E, Side side, double exponent,
                    double min_fraction) {
  const TurningPair tp = turning_points(model, E);
  const double width = tp.width();
  const double dir = side == Side::Left ? -1.0 : 1.0;
  const double start = side == Side::Left ? tp.x1 : tp.x2;
  const double step = width / 400.0;
  const double hb = model.hbar();
  const double m = model.mass();

  double acc = 0.0;
  double x = start;
  double dx = step;
  for (int i = 0; i < 200000; ++i) {
    const double xm = x + dir * 0.5 * dx;
    const double kappa2 = 2.0 * m * (model(xm) - E) / (hb * hb);
    acc += std::sqrt(std::max(kappa2, 0.0)) * dx;
    x += dir * dx;
    if (acc >= exponent && std::abs(x - start) >= min_fraction * width) return x;
    // Grow the step once well into the barrier so slowly decaying tails
    // (Coulomb, Morse near threshold) stay cheap.
    if (i > 400) dx = std::min(dx * 1.01, 4.0 * width);
  }
  throw std::runtime_error("decay_margin: barrier too thin for the requested decay");
}

StartData decaying_start(const PotentialModel& model, double E, Side side) {
  const double x = decay_margin(model, E, side);
  const double kappa2 = 2.0 * model.mass() * (model(x) - E) / (model.hbar() * model.hbar());
  const double kappa = std::sqrt(std::max(kappa2, 0.0));
  return {x, 1.0, side == Side::Left ? kappa : -kappa};
}

StartData wall_start(const PotentialModel& model, double E, Side side) {
  const TurningPair tp = turning_points(model, E);
  if (model.family() == Family::CoulombCentrifugal) {
    return regular_series(model, E, side, 1e-6 * tp.x2);
  }
  const double wall = wall_position(model, side);
  const double gap = side == Side::Left ? tp.x1 - wall : wall - tp.x2;
  return regular_series(model, E, side, 1e-3 * gap);
}

}  // namespace qhj::detail
