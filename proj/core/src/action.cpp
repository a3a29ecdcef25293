#include "qhj/action.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qhj/numerics.hpp"

namespace qhj {

namespace {

constexpr double kPi = std::numbers::pi;

// Energy scale used for relative slack and initial brackets.
double energy_scale(const PotentialModel& model) {
  const double vmin = model.minimum_value();
  if (std::isfinite(vmin) && vmin != 0.0) return std::abs(vmin);
  if (model.family() == Family::CoulombCentrifugal) {
    const double e2 = model.as<CoulombParams>().e2;
    return model.mass() * e2 * e2 / (model.hbar() * model.hbar());
  }
  if (model.family() == Family::Harmonic) {
    return model.hbar() * model.as<HarmonicParams>().omega;
  }
  return 1.0;
}

}  // namespace

double classical_action(const PotentialModel& model, double E) {
  const TurningPair tp = turning_points(model, E);
  const double two_m = 2.0 * model.mass();
  return numerics::integrate_endpoint_regularized(
      [&](double x) {
        const double d = E - model(x);
        return d > 0.0 ? std::sqrt(two_m * d) : 0.0;
      },
      tp.x1, tp.x2);
}

double classical_action_slope(const PotentialModel& model, double E) {
  const TurningPair tp = turning_points(model, E);
  const double m = model.mass();
  // m / p_c diverges like (x - x_i)^{-1/2}; the sin^2 Jacobian absorbs it.
  std::vector<double> xs;
  std::vector<double> ws;
  numerics::endpoint_regularized_nodes(tp.x1, tp.x2, numerics::gauss_legendre_96(), xs, ws);
  double sum = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d = E - model(xs[i]);
    if (d > 0.0) sum += ws[i] * m / std::sqrt(2.0 * m * d);
  }
  return sum;
}

double maslov_action(const PotentialModel& model, int n) { return (n + 0.5) * kPi * model.hbar(); }

double energy_for_action(const PotentialModel& model, double target) {
  if (!(target > 0.0) || !std::isfinite(target)) {
    std::ostringstream os;
    os << model.name() << ": action target " << target << " is not a positive finite value";
    throw NoSuchLevelError("action", os.str());
  }
  const double scale = energy_scale(model);
  const double vmin = model.minimum_value();
  const double threshold = model.continuum_threshold();
  auto f = [&](double E) { return classical_action(model, E) - target; };

  double lo = 0.0;
  if (std::isfinite(vmin)) {
    lo = vmin + 1e-12 * scale;
  } else {
    lo = -scale;
    for (int i = 0; i < 200 && f(lo) >= 0.0; ++i) lo *= 4.0;
  }
  if (f(lo) >= 0.0) throw ScanExhaustedError("action", "could not bracket the action from below");

  double hi = 0.0;
  if (std::isfinite(threshold)) {
    double gap = 0.5 * (threshold - lo);
    hi = threshold - gap;
    int i = 0;
    for (; i < 200 && f(hi) <= 0.0; ++i) {
      gap *= 0.25;
      hi = threshold - gap;
      if (gap < 1e-14 * scale) break;
    }
    if (f(hi) <= 0.0) {
      std::ostringstream os;
      os << model.name() << " (" << model.describe() << "): action " << target
         << " exceeds the bound-state range";
      throw NoSuchLevelError("action", os.str());
    }
  } else {
    hi = std::max(2.0 * lo, scale);
    int i = 0;
    for (; i < 400 && f(hi) <= 0.0; ++i) hi *= 2.0;
    if (f(hi) <= 0.0) throw ScanExhaustedError("action", "could not bracket the action from above");
  }
  return numerics::solve_bracketed(f, lo, hi, 1e-15 * scale, 1e-14);
}

double wkb_energy(const PotentialModel& model, int n) {
  if (n < 0) throw std::invalid_argument("node count must be >= 0");
  return energy_for_action(model, maslov_action(model, n));
}

double corrected_energy(const PotentialModel& model, int n, double R) {
  if (n < 0) throw std::invalid_argument("node count must be >= 0");
  if (!std::isfinite(R)) throw std::invalid_argument("residual R must be finite");
  return energy_for_action(model, maslov_action(model, n) + R);
}

double residual_route_b(const PotentialModel& model, int n, double E_exact) {
  return classical_action(model, E_exact) - maslov_action(model, n);
}

}  // namespace qhj
