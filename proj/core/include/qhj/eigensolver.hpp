#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qhj/potentials.hpp"

namespace qhj {

/// Uniform grid x_i = x_min + i h, i = 0 .. n_points - 1.
struct Grid {
  double x_min = 0.0;
  double x_max = 1.0;
  std::size_t n_points = 2001;

  double spacing() const noexcept { return (x_max - x_min) / static_cast<double>(n_points - 1); }
  double at(std::size_t i) const noexcept { return x_min + spacing() * static_cast<double>(i); }
  std::vector<double> abscissas() const;
  /// Same end points with the spacing halved (2 n - 1 points).
  Grid refined() const noexcept { return {x_min, x_max, 2 * n_points - 1}; }
};

enum class SweepDirection { LeftToRight, RightToLeft };

struct EigenOptions {
  /// Absolute tolerance on the returned eigenvalue.
  double tolerance = 1e-10;
  std::size_t min_points = 2001;
  std::size_t max_points = 400001;
  /// Upper bound on h * k_max inside the well.
  double max_step_phase = 0.01;
  /// Combine grids h and h/2 as (16 E_{h/2} - E_h) / 15.
  bool richardson = true;
  int max_scan_steps = 400;
};

struct EigenState {
  int n = 0;
  double E = 0.0;
  Grid grid;
  std::vector<double> psi;
  bool normalized = false;
};

/// Grid covering [x1, x2] at energy E plus barrier margins: smooth sides extend
/// until the tunnelling exponent reaches 40 (and at least 40% of the well
/// width); walls are the grid ends (cot^2: exactly (0, a); Coulomb: starts at
/// 1e-6 r2).
Grid default_grid(const PotentialModel& model, double E, const EigenOptions& options = {});

/// Three-term Numerov recursion at fixed E across the whole grid. The start
/// end gets the decaying (smooth barrier) or regular (wall) boundary
/// behaviour. Samples are unnormalized; the running pair is renormalized on
/// overflow, so earlier samples may be scaled down along the way.
std::vector<double> numerov_sweep(const PotentialModel& model, double E, const Grid& grid,
                                  SweepDirection direction);

/// Strict sign changes of the interior samples, ignoring both end points and
/// samples below 1e-12 max|psi|.
int count_nodes(std::span<const double> samples);

/// Number of bound levels, when finite (Morse).
std::optional<int> bound_level_count(const PotentialModel& model);

/// Energy of the bound state with n interior nodes: node-count bracketing,
/// then root finding on the Numerov matching condition at the outer turning
/// point.
double eigenvalue(const PotentialModel& model, int n, const EigenOptions& options = {});

/// eigenvalue() plus the stitched, unit-normalized wave function
/// (sum psi^2 h = 1, positive on the left).
EigenState eigenstate(const PotentialModel& model, int n, const EigenOptions& options = {});

}  // namespace qhj
