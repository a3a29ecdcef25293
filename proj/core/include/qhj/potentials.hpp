#pragma once

#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "qhj/errors.hpp"

namespace qhj {

enum class Family { Harmonic, Morse, CoulombCentrifugal, CotSquared, Quartic };

/// V(x) = m omega^2 x^2 / 2
struct HarmonicParams {
  double omega = 1.0;
};

/// V(x) = V0 (exp(-2 a x) - 2 exp(-a x))
struct MorseParams {
  double V0 = 32.0;
  double a = 1.0;
};

/// Radial hydrogen-like problem, V(r) = -e2/r + l(l+1) hbar^2 / (2 m r^2).
struct CoulombParams {
  double e2 = 1.0;
  int l = 0;
};

/// V(x) = V0 cot^2(pi x / a) on the open box (0, a).
struct CotSquaredParams {
  double V0 = 1.0;
  double a = 3.14159265358979323846;
};

/// V(x) = x^4 / a
struct QuarticParams {
  double a = 1.0;
};

using PotentialParams =
    std::variant<HarmonicParams, MorseParams, CoulombParams, CotSquaredParams, QuarticParams>;

/// Reduced Planck constant and particle mass. Everything defaults to atomic-like
/// units with hbar = m = 1.
struct Units {
  double hbar = 1.0;
  double mass = 1.0;
};

/// Natural coordinate domain of a family. Open ends at lo/hi mean the potential
/// is singular there (hard wall or r = 0).
struct Domain {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
};

/// One of the five benchmark potentials with its parameters. Immutable after
/// construction.
class PotentialModel {
 public:
  static PotentialModel harmonic(double omega, Units units = {});
  static PotentialModel morse(double V0, double a, Units units = {});
  static PotentialModel coulomb(double e2, int l, Units units = {});
  static PotentialModel cot_squared(double V0, double a, Units units = {});
  static PotentialModel quartic(double a, Units units = {});

  Family family() const noexcept { return family_; }
  const PotentialParams& params() const noexcept { return params_; }
  double hbar() const noexcept { return units_.hbar; }
  double mass() const noexcept { return units_.mass; }
  const Units& units() const noexcept { return units_; }

  template <class P>
  const P& as() const {
    return std::get<P>(params_);
  }

  Domain domain() const noexcept;

  /// V(x). Throws DomainError outside the natural domain.
  double operator()(double x) const;
  /// dV/dx, analytic.
  double derivative(double x) const;

  /// Abscissa of the minimum of V (for Coulomb with l = 0 the minimum is at the
  /// r = 0 boundary and this returns 0).
  double minimum_location() const noexcept;
  /// min V, -infinity for the l = 0 Coulomb problem.
  double minimum_value() const noexcept;
  /// Bound-state energies lie strictly below this value (+infinity for
  /// confining families).
  double continuum_threshold() const noexcept;

  /// Short CLI name: harmonic, morse, hydrogen, cot2, quartic.
  std::string name() const;
  /// Compact "key=value;key=value" rendering of the parameters.
  std::string describe() const;

  /// (2m / hbar^2) (E - V(x)): the local squared wave number.
  double wave_number_squared(double E, double x) const;

 private:
  PotentialModel(Family family, PotentialParams params, Units units);

  Family family_;
  PotentialParams params_;
  Units units_;
};

/// Classical turning points x1 < x2. For the l = 0 Coulomb problem x1 is the
/// r = 0 boundary rather than a root of V(x) = E.
struct TurningPair {
  double x1 = 0.0;
  double x2 = 0.0;
  bool x1_is_boundary = false;

  double width() const noexcept { return x2 - x1; }
};

double evaluate(const PotentialModel& model, double x);

/// +sqrt(2m(E - V(x))). Throws ForbiddenRegionError when E < V(x) beyond
/// round-off.
double classical_momentum(const PotentialModel& model, double E, double x);

/// Closed-form turning points. Throws NoTurningPointsError when E does not
/// admit a bound classical region.
TurningPair turning_points(const PotentialModel& model, double E);

/// Builds a model from a CLI family name ("harmonic", "morse", "hydrogen",
/// "cot2", "quartic") and key=value parameters. Unknown names or keys throw
/// std::invalid_argument; missing keys take the defaults above.
PotentialModel make_model(std::string_view family, const std::map<std::string, double>& params);

std::string_view family_name(Family family) noexcept;

}  // namespace qhj
