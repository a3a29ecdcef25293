#pragma once

#include "qhj/potentials.hpp"

namespace qhj {

/// Classical half-cycle action I(E) = integral of sqrt(2m(E - V)) between the
/// turning points, by endpoint-regularized 96-point Gauss-Legendre.
double classical_action(const PotentialModel& model, double E);

/// dI/dE, the classical half period: integral of m / p_c between the turning
/// points. Used for level-spacing estimates (spacing ~ pi hbar / (dI/dE)).
double classical_action_slope(const PotentialModel& model, double E);

/// Energy at which I(E) equals `target`. I is strictly increasing on the bound
/// range, so the root is unique when it exists.
double energy_for_action(const PotentialModel& model, double target);

/// Semiclassical level: I(E) = (n + 1/2) pi hbar.
double wkb_energy(const PotentialModel& model, int n);

/// Level of the corrected rule I(E) = (n + 1/2) pi hbar + R.
double corrected_energy(const PotentialModel& model, int n, double R);

/// Residual by the action-difference route: R = I(E_exact) - (n + 1/2) pi hbar.
double residual_route_b(const PotentialModel& model, int n, double E_exact);

/// (n + 1/2) pi hbar
double maslov_action(const PotentialModel& model, int n);

}  // namespace qhj
