#pragma once

#include <optional>

#include "qhj/potentials.hpp"

namespace qhj {

/// Quantum numbers attached to a closed-form evaluation. `n` is always the
/// node count; hydrogen also carries (n_r, l, principal n = n_r + l + 1) and
/// the cot^2 exact formula uses its own index n' = n + 1.
struct LevelIndices {
  int n = 0;
  std::optional<int> radial;
  std::optional<int> azimuthal;
  std::optional<int> principal;
  std::optional<int> exact_index;
};

struct FormulaTriple {
  double E_wkb = 0.0;
  std::optional<double> E_corrected;
  std::optional<double> E_exact;
  LevelIndices indices;
};

/// Printed closed forms per family: semiclassical level, corrected level (when
/// R is supplied: n + 1/2 -> n + 1/2 + R/(pi hbar)) and the exact quantum level
/// where one exists (none for the quartic oscillator).
FormulaTriple closed_form_energies(const PotentialModel& model, int n,
                                   std::optional<double> R = std::nullopt);

/// Residual of the radial Coulomb problem, pi (l + 1/2 - sqrt(l(l+1))), in
/// units of hbar.
double hydrogen_R_closed(int l);

/// Analytic classical action I(E) for each family.
double classical_action_closed(const PotentialModel& model, double E);

/// The cot^2 exact-spectrum parameter lambda = (sqrt(8 m V0 a^2/(pi^2 hbar^2) + 1) - 1) / 4.
double cot_squared_lambda(const PotentialModel& model);

/// Quartic semiclassical constant C with E_wkb = (C (n + 1/2))^{4/3}:
/// C = 4 sqrt(pi) hbar Gamma(7/4) / (sqrt(2m) a^{1/4} Gamma(1/4)).
double quartic_wkb_constant(const PotentialModel& model);

}  // namespace qhj
