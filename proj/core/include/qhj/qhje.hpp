#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "qhj/eigensolver.hpp"
#include "qhj/numerics.hpp"
#include "qhj/potentials.hpp"

namespace qhj {

/// Amplitude, slope and phase of the phase-amplitude representation at one
/// abscissa. X' = hbar / rho^2 and X is the accumulated phase times hbar,
/// zero at the left turning point.
struct AmplitudeSample {
  double x = 0.0;
  double rho = 0.0;
  double drho = 0.0;
  double X = 0.0;
};

/// Solution of rho'' + k^2 rho = 1/rho^3 (k^2 = 2m(E - V)/hbar^2) for one
/// (model, E), with initial data fixed by phase conditions at both turning
/// points:
///   * smooth or wall sides on both ends: the phase is pi/4 past the left
///     turning point and pi/4 short of a multiple of pi at the right one, as
///     seen from the solutions decaying into each barrier;
///   * l = 0 Coulomb: phase pi/2 at the outer turning point, balanced against
///     the outward solution that vanishes there.
/// At an eigenvalue the left and right conditions coincide and
/// X(x2) = (n + 1/2) pi hbar (Coulomb l = 0: the phase offset at r = 0 is a
/// multiple of pi). Away from eigenvalues the representation still exists in a
/// neighbourhood, which makes X(x2) a continuous function of E.
class MilneSolution {
 public:
  /// Throws RepresentationError when no phase-consistent amplitude exists at E.
  MilneSolution(const PotentialModel& model, double E, numerics::OdeTolerance tol = {});

  const PotentialModel& model() const noexcept { return model_; }
  double energy() const noexcept { return E_; }
  const TurningPair& turning_points() const noexcept { return tp_; }
  double init_point() const noexcept { return x0_; }

  /// X at the right turning point: the quantization integral of X' over [x1, x2].
  double action() const noexcept { return action_; }
  /// Constant added to X/hbar in the reconstructed wave function
  /// sin(X/hbar + offset): pi/4, or the r = 0 phase for l = 0 Coulomb.
  double phase_offset() const noexcept { return offset_; }

  /// States at arbitrary abscissas in the closed classical region, any order.
  std::vector<AmplitudeSample> sample(std::span<const double> xs) const;
  AmplitudeSample at(double x) const;

 private:
  std::vector<AmplitudeSample> integrate_from_init(std::span<const double> xs) const;

  PotentialModel model_;
  double E_;
  TurningPair tp_;
  numerics::OdeTolerance tol_;
  double x0_ = 0.0;
  double rho0_ = 0.0;
  double drho0_ = 0.0;
  double theta_left_ = 0.0;  // phase at x1 relative to x0
  double action_ = 0.0;
  double offset_ = 0.0;
};

/// rho on the abscissas of `grid` (all inside [x1, x2]).
std::vector<double> milne_amplitude(const PotentialModel& model, double E, const Grid& grid);

/// Amplitude for an arbitrary squared wave number k^2(x), integrated from
/// (x0, rho0, drho0) through the abscissas xs. Exposed for checks against
/// cases with known amplitudes.
std::vector<numerics::OdeState2> integrate_amplitude(const std::function<double(double)>& k2,
                                                     double x0, double rho0, double drho0,
                                                     std::span<const double> xs,
                                                     numerics::OdeTolerance tol = {});

struct QhjFieldOptions {
  std::size_t n_points = 2001;
  /// Fields live on [x1 + delta, x2 - delta] with delta = margin * (x2 - x1).
  double margin = 1e-4;
  numerics::OdeTolerance tolerance{};
};

/// Real and imaginary parts of the quantum abbreviated action on the classical
/// region, with the quantities derived from them.
struct QhjFields {
  explicit QhjFields(PotentialModel m) : model(std::move(m)) {}

  PotentialModel model;
  double E = 0.0;
  TurningPair tp;
  Grid grid;
  std::vector<double> x;
  std::vector<double> X;
  std::vector<double> Xp;
  std::vector<double> Xpp;
  std::vector<double> Xppp;
  std::vector<double> Y;
  std::vector<double> F;
  /// sqrt(1 + F) - 1 where 1 + F > 0; NaN elsewhere.
  std::vector<double> G;
  std::vector<double> p_classical;
  /// Integral of p_classical from x1 to each abscissa.
  std::vector<double> W_classical;
  /// First abscissa where 1 + F <= 0, if any.
  std::optional<double> undefined_at;
  /// X(x2) - X(x1), extended to the exact turning points.
  double quantum_action = 0.0;
  double phase_offset = 0.0;
  std::shared_ptr<const MilneSolution> solution;
};

QhjFields qhj_fields(const PotentialModel& model, double E, const QhjFieldOptions& options = {});

/// psi = A / sqrt(X') sin(X/hbar + offset) on the fields grid, with A fitted by
/// least squares to `reference` over the interior 90% of [x1, x2].
std::vector<double> reconstruct_wavefunction(const QhjFields& fields, const EigenState& reference);

/// Same, with the reference computed by the Numerov solver for the node count
/// seen in the fields.
std::vector<double> reconstruct_wavefunction(const QhjFields& fields);

/// Number of sign changes of sin(X/hbar + offset) on the fields grid.
int node_count(const QhjFields& fields);

/// Numerov eigenstate interpolated onto the fields grid.
std::vector<double> interpolate_state(const EigenState& state, std::span<const double> xs);

/// Integral of X' over [x1, x2].
double quantum_action_integral(const QhjFields& fields);

struct RouteAResidual {
  /// Integral of X' G over [x1, x2].
  double R = 0.0;
  /// Integral of (p_c - X') = I(E) - integral of X'.
  double R_difference = 0.0;
};

/// Residual from the fields. Throws UndefinedCorrectionError if G is undefined
/// somewhere on the fields grid.
RouteAResidual residual_route_a(const QhjFields& fields, const PotentialModel& model);

/// X'^2 - 3 hbar^2 X''^2/(4 X'^2) + hbar^2 X'''/(2 X') - 2m(E - V), divided by
/// the sum of the magnitudes of its terms, at each fields abscissa.
std::vector<double> hamilton_jacobi_residual(const QhjFields& fields);

/// Zeros of F inside (x1, x2), located by sign changes on the fields grid and
/// refined to root precision.
std::vector<double> f_zeros(const QhjFields& fields);

/// Energy at which the quantization integral equals (n + 1/2) pi hbar.
double quantize_via_qhj(const PotentialModel& model, int n, double tolerance = 1e-6);

}  // namespace qhj
