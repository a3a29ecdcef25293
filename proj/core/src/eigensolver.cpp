#include "qhj/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "boundary.hpp"
#include "qhj/action.hpp"
#include "qhj/numerics.hpp"

namespace qhj {

using detail::Side;

std::vector<double> Grid::abscissas() const {
  std::vector<double> xs(n_points);
  for (std::size_t i = 0; i < n_points; ++i) xs[i] = at(i);
  return xs;
}

namespace {

constexpr double kOverflow = 1e150;
constexpr double kRescale = 1e-150;

// Local level spacing pi hbar / (dI/dE) from the classical action.
double level_spacing(const PotentialModel& model, double E) {
  return std::numbers::pi * model.hbar() / classical_action_slope(model, E);
}

std::string level_context(const PotentialModel& model, int n) {
  std::ostringstream os;
  os << model.name() << " (" << model.describe() << "), n=" << n;
  return os.str();
}

// Numerov integration of psi'' = -g(x) psi on a fixed grid. V is sampled once;
// each energy only rebuilds the c_i = 1 + h^2 g_i / 12 factors.
class Shooter {
 public:
  Shooter(const PotentialModel& model, const Grid& grid)
      : model_(model), grid_(grid), h_(grid.spacing()), potential_(grid.n_points) {
    const Domain dom = model.domain();
    for (std::size_t i = 0; i < grid.n_points; ++i) {
      const double x = grid.at(i);
      const bool inside = x > dom.lo && x < dom.hi;
      potential_[i] = inside ? model(x) : std::numeric_limits<double>::quiet_NaN();
    }
    left_wall_ = detail::has_wall(model, Side::Left);
    right_wall_ = detail::has_wall(model, Side::Right);
  }

  const Grid& grid() const { return grid_; }

  struct Sweep {
    std::vector<double> psi;
    int nodes = 0;
  };

  // Integrates from the start end up to and including local index `stop`
  // (counted from the start end).
  Sweep sweep(double E, SweepDirection dir, std::size_t stop) const {
    const std::size_t N = grid_.n_points;
    const bool l2r = dir == SweepDirection::LeftToRight;
    auto idx = [&](std::size_t j) { return l2r ? j : N - 1 - j; };
    const double scale = 2.0 * model_.mass() / (model_.hbar() * model_.hbar());
    auto c = [&](std::size_t j) { return 1.0 + h_ * h_ * scale * (E - potential_[idx(j)]) / 12.0; };

    const Side start_side = l2r ? Side::Left : Side::Right;
    const bool start_wall = l2r ? left_wall_ : right_wall_;
    const bool end_wall = l2r ? right_wall_ : left_wall_;

    Sweep out;
    out.psi.assign(N, 0.0);
    auto& psi = out.psi;
    std::size_t j0 = 1;  // last index set by the start data
    if (start_wall && model_.family() == Family::CotSquared) {
      psi[idx(0)] = 0.0;
      psi[idx(1)] = detail::regular_series(model_, E, start_side, h_).psi;
      psi[idx(2)] = detail::regular_series(model_, E, start_side, 2.0 * h_).psi;
      j0 = 2;
    } else if (start_wall) {
      psi[idx(0)] = detail::regular_series(model_, E, start_side, grid_.at(idx(0))).psi;
      psi[idx(1)] = detail::regular_series(model_, E, start_side, grid_.at(idx(1))).psi;
    } else {
      psi[idx(0)] = 0.0;
      psi[idx(1)] = 1.0;
    }
    const std::size_t last = std::min(stop, end_wall ? N - 2 : N - 1);

    int sign = 0;
    auto track = [&](std::size_t j) {
      if (j == 0 || j >= N - 1) return;
      const double v = psi[idx(j)];
      if (v == 0.0) return;
      const int s = v > 0.0 ? 1 : -1;
      if (sign != 0 && s != sign) ++out.nodes;
      sign = s;
    };
    for (std::size_t j = 1; j <= j0; ++j) track(j);

    double c_prev = j0 >= 1 ? c(j0 - 1) : 0.0;
    double c_cur = c(j0);
    for (std::size_t j = j0; j < last; ++j) {
      const double c_next = c(j + 1);
      // At a wall start the j0 - 1 sample sits next to the singularity; its
      // c factor is finite because the wall point itself is never used.
      double next = ((12.0 - 10.0 * c_cur) * psi[idx(j)] - c_prev * psi[idx(j - 1)]) / c_next;
      psi[idx(j + 1)] = next;
      if (std::abs(next) > kOverflow) {
        for (std::size_t k = 0; k <= j + 1; ++k) psi[idx(k)] *= kRescale;
      }
      track(j + 1);
      c_prev = c_cur;
      c_cur = c_next;
    }
    return out;
  }

  int count(double E) const {
    return sweep(E, SweepDirection::LeftToRight, grid_.n_points - 1).nodes;
  }

  double c_at(double E, std::size_t i) const {
    const double scale = 2.0 * model_.mass() / (model_.hbar() * model_.hbar());
    return 1.0 + h_ * h_ * scale * (E - potential_[i]) / 12.0;
  }

  // Residual of the Numerov recursion at the matching index when the left
  // and right solutions are scaled to agree there.
  double mismatch(double E, std::size_t m) const {
    const std::size_t N = grid_.n_points;
    const Sweep left = sweep(E, SweepDirection::LeftToRight, m);
    const Sweep right = sweep(E, SweepDirection::RightToLeft, N - 1 - m);
    const double lm = left.psi[m];
    const double rm = right.psi[m];
    return c_at(E, m - 1) * left.psi[m - 1] / lm + c_at(E, m + 1) * right.psi[m + 1] / rm -
           (12.0 - 10.0 * c_at(E, m));
  }

  std::vector<double> stitched(double E, std::size_t m) const {
    const std::size_t N = grid_.n_points;
    Sweep left = sweep(E, SweepDirection::LeftToRight, m);
    const Sweep right = sweep(E, SweepDirection::RightToLeft, N - 1 - m);
    const double ratio = left.psi[m] / right.psi[m];
    for (std::size_t i = m + 1; i < N; ++i) left.psi[i] = right.psi[i] * ratio;
    return left.psi;
  }

  std::size_t matching_index(double E) const {
    double x2 = 0.0;
    try {
      x2 = turning_points(model_, E).x2;
    } catch (const NoTurningPointsError&) {
      x2 = 0.5 * (grid_.x_min + grid_.x_max);
    }
    const double s = (x2 - grid_.x_min) / h_;
    const long i = std::lround(s);
    return static_cast<std::size_t>(std::clamp(i, 2L, static_cast<long>(grid_.n_points) - 3));
  }

 private:
  const PotentialModel& model_;
  Grid grid_;
  double h_;
  std::vector<double> potential_;
  bool left_wall_ = false;
  bool right_wall_ = false;
};

struct Bracket {
  double lo;
  double hi;
};

// Expands from E_guess in steps of `step` until count(lo) <= n < count(hi).
Bracket scan_bracket(const Shooter& shooter, const PotentialModel& model, int n, double E_guess,
                     double step, const EigenOptions& options) {
  const double threshold = model.continuum_threshold();
  double lo = E_guess - step;
  int steps = 0;
  while (shooter.count(lo) > n) {
    lo -= step;
    if (++steps > options.max_scan_steps) {
      throw ScanExhaustedError("eigensolver", "lower energy scan exhausted for " + level_context(model, n));
    }
  }
  double hi = std::isfinite(threshold) ? std::min(E_guess + step, 0.5 * (E_guess + threshold))
                                       : E_guess + step;
  steps = 0;
  while (shooter.count(hi) <= n) {
    if (std::isfinite(threshold)) {
      hi = std::min(hi + step, 0.5 * (hi + threshold));
      if (threshold - hi < 1e-14 * std::max(1.0, std::abs(E_guess))) {
        throw NoSuchLevelError("eigensolver", "no bound state for " + level_context(model, n));
      }
    } else {
      hi += step;
    }
    if (++steps > options.max_scan_steps) {
      throw ScanExhaustedError("eigensolver", "upper energy scan exhausted for " + level_context(model, n));
    }
  }
  return {lo, hi};
}

struct GridSolution {
  double E;
  std::size_t match;
};

GridSolution refine_level(const Shooter& shooter, int n, Bracket b, double spacing,
                          const EigenOptions& options) {
  auto bisect_count = [&](double width) {
    while (b.hi - b.lo > width) {
      const double mid = 0.5 * (b.lo + b.hi);
      if (shooter.count(mid) <= n) {
        b.lo = mid;
      } else {
        b.hi = mid;
      }
    }
  };
  bisect_count(1e-4 * spacing);

  const std::size_t m = shooter.matching_index(0.5 * (b.lo + b.hi));
  const double f_lo = shooter.mismatch(b.lo, m);
  const double f_hi = shooter.mismatch(b.hi, m);
  const double tol = 0.01 * options.tolerance;
  if (std::isfinite(f_lo) && std::isfinite(f_hi) && (f_lo > 0.0) != (f_hi > 0.0)) {
    const double E = numerics::solve_bracketed([&](double E) { return shooter.mismatch(E, m); }, b.lo,
                                               b.hi, tol, 1e-15);
    return {E, m};
  }
  bisect_count(std::max(tol, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(b.lo)));
  return {0.5 * (b.lo + b.hi), m};
}

struct LevelSolution {
  double E;
  Grid grid;
  double E_grid;  // discrete eigenvalue on `grid`
  std::size_t match;
};

LevelSolution solve_level(const PotentialModel& model, int n, const EigenOptions& options) {
  if (n < 0) throw std::invalid_argument("node count must be >= 0");
  if (auto count = bound_level_count(model); count && n >= *count) {
    throw NoSuchLevelError("eigensolver", "no bound state for " + level_context(model, n));
  }
  double E_guess = 0.0;
  try {
    E_guess = wkb_energy(model, n);
  } catch (const NoSuchLevelError&) {
    throw NoSuchLevelError("eigensolver", "no bound state for " + level_context(model, n));
  }
  const double spacing = level_spacing(model, E_guess);
  const double step = 0.25 * spacing;

  const double threshold = model.continuum_threshold();
  double E_top = E_guess + 2.0 * spacing;
  if (std::isfinite(threshold)) E_top = std::min(E_top, 0.5 * (E_guess + threshold));
  const Grid grid = default_grid(model, E_top, options);

  const Shooter coarse(model, grid);
  const Bracket b = scan_bracket(coarse, model, n, E_guess, step, options);
  const GridSolution sol = refine_level(coarse, n, b, spacing, options);
  if (!options.richardson) return {sol.E, grid, sol.E, sol.match};

  const Grid fine_grid = grid.refined();
  const Shooter fine(model, fine_grid);
  const double w = 1e-3 * spacing;
  Bracket fb{sol.E - w, sol.E + w};
  if (fine.count(fb.lo) > n || fine.count(fb.hi) <= n) {
    fb = scan_bracket(fine, model, n, sol.E, step, options);
  }
  const GridSolution fsol = refine_level(fine, n, fb, spacing, options);
  const double E = fsol.E + (fsol.E - sol.E) / 15.0;
  return {E, fine_grid, fsol.E, fsol.match};
}

}  // namespace

Grid default_grid(const PotentialModel& model, double E, const EigenOptions& options) {
  const TurningPair tp = turning_points(model, E);
  double lo = 0.0;
  double hi = 0.0;
  if (model.family() == Family::CotSquared) {
    lo = 0.0;
    hi = model.as<CotSquaredParams>().a;
  } else if (model.family() == Family::CoulombCentrifugal) {
    lo = 1e-6 * tp.x2;
    hi = detail::decay_margin(model, E, Side::Right);
  } else {
    lo = detail::decay_margin(model, E, Side::Left);
    hi = detail::decay_margin(model, E, Side::Right);
  }

  // Largest local wave number in the well, sampled away from the r = 0
  // singularity of the l = 0 Coulomb problem.
  const double from = tp.x1_is_boundary ? tp.x1 + 0.02 * tp.width() : tp.x1;
  double kmax = 0.0;
  constexpr int kSamples = 2000;
  for (int i = 1; i < kSamples; ++i) {
    const double x = from + (tp.x2 - from) * i / kSamples;
    kmax = std::max(kmax, std::sqrt(std::max(model.wave_number_squared(E, x), 0.0)));
  }
  const double needed = (hi - lo) * kmax / options.max_step_phase;
  std::size_t n = std::max<std::size_t>(options.min_points, static_cast<std::size_t>(needed) + 1);
  n = std::min(n, options.max_points);
  if (n % 2 == 0) ++n;
  return {lo, hi, n};
}

std::vector<double> numerov_sweep(const PotentialModel& model, double E, const Grid& grid,
                                  SweepDirection direction) {
  if (grid.n_points < 4) throw std::invalid_argument("numerov_sweep: grid needs at least 4 points");
  const Shooter shooter(model, grid);
  return shooter.sweep(E, direction, grid.n_points - 1).psi;
}

int count_nodes(std::span<const double> samples) {
  if (samples.size() < 3) return 0;
  double peak = 0.0;
  for (double v : samples) peak = std::max(peak, std::abs(v));
  const double floor = 1e-12 * peak;
  int sign = 0;
  int nodes = 0;
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
    const double v = samples[i];
    if (std::abs(v) <= floor) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (sign != 0 && s != sign) ++nodes;
    sign = s;
  }
  return nodes;
}

std::optional<int> bound_level_count(const PotentialModel& model) {
  if (model.family() != Family::Morse) return std::nullopt;
  const auto& p = model.as<MorseParams>();
  const double lambda = std::sqrt(2.0 * model.mass() * p.V0) / (p.a * model.hbar());
  return static_cast<int>(std::ceil(lambda - 0.5));
}

double eigenvalue(const PotentialModel& model, int n, const EigenOptions& options) {
  return solve_level(model, n, options).E;
}

EigenState eigenstate(const PotentialModel& model, int n, const EigenOptions& options) {
  const LevelSolution sol = solve_level(model, n, options);
  const Shooter shooter(model, sol.grid);
  std::vector<double> psi = shooter.stitched(sol.E_grid, sol.match);

  const double h = sol.grid.spacing();
  double norm = 0.0;
  double peak = 0.0;
  for (double v : psi) {
    norm += v * v;
    peak = std::max(peak, std::abs(v));
  }
  norm = std::sqrt(norm * h);
  double sign = 1.0;
  for (double v : psi) {
    if (std::abs(v) > 1e-8 * peak) {
      sign = v > 0.0 ? 1.0 : -1.0;
      break;
    }
  }
  for (double& v : psi) v *= sign / norm;

  EigenState out;
  out.n = n;
  out.E = sol.E;
  out.grid = sol.grid;
  out.psi = std::move(psi);
  out.normalized = true;
  return out;
}

}  // namespace qhj
