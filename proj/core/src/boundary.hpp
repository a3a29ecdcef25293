#pragma once

#include "qhj/potentials.hpp"

namespace qhj::detail {

enum class Side { Left, Right };

/// Value and slope of a solution at a point.
struct StartData {
  double x = 0.0;
  double psi = 0.0;
  double dpsi = 0.0;
};

/// True when the given side of the well ends at a singular wall (cot^2 box
/// ends, r = 0 for the radial Coulomb problem) rather than a smooth barrier.
bool has_wall(const PotentialModel& model, Side side);

/// Coordinate of the wall on that side.
double wall_position(const PotentialModel& model, Side side);

/// Regular solution at distance `offset` from a wall, from a truncated
/// Frobenius series: r^{l+1} sum a_k r^k for Coulomb, x^s sum b_j x^{2j} for
/// cot^2. Normalized so the leading coefficient is 1; dpsi is the derivative
/// with respect to x.
StartData regular_series(const PotentialModel& model, double E, Side side, double offset);

/// Point beyond the turning point on a smooth side where the WKB tunnelling
/// exponent integral of kappa dx reaches `exponent`, and at least
/// `min_fraction` of the well width away.
double decay_margin(const PotentialModel& model, double E, Side side, double exponent = 40.0,
                    double min_fraction = 0.4);

/// Start data for the solution decaying into the barrier on a smooth side:
/// psi = 1 at the margin point with slope +-kappa (growing toward the well).
StartData decaying_start(const PotentialModel& model, double E, Side side);

/// Wall-adjacent start point used by the adaptive ODE solves.
StartData wall_start(const PotentialModel& model, double E, Side side);

}  // namespace qhj::detail
