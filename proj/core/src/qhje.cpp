#include "qhj/qhje.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "boundary.hpp"
#include "qhj/action.hpp"

namespace qhj {

using detail::Side;
using numerics::OdeState2;
using numerics::OdeState3;
using numerics::OdeState4;

namespace {

constexpr double kPi = std::numbers::pi;

bool is_coulomb_s_wave(const PotentialModel& model) {
  return model.family() == Family::CoulombCentrifugal && model.as<CoulombParams>().l == 0;
}

// Solutions of psi'' = -k^2 psi, two at a time: (u, u', v, v').
std::vector<OdeState4> propagate_pair(const PotentialModel& model, double E, OdeState4 y0,
                                      double x0, std::span<const double> xs,
                                      numerics::OdeTolerance tol) {
  std::function<void(const OdeState4&, OdeState4&, double)> rhs =
      [&](const OdeState4& y, OdeState4& dy, double x) {
        const double k2 = model.wave_number_squared(E, x);
        dy[0] = y[1];
        dy[1] = -k2 * y[0];
        dy[2] = y[3];
        dy[3] = -k2 * y[2];
      };
  return numerics::integrate_through<OdeState4>(rhs, y0, x0, xs, tol);
}

// Value and slope at `target` of the solution that is regular at the wall or
// decays into the barrier on the given side.
OdeState2 barrier_solution(const PotentialModel& model, double E, Side side, double target,
                           numerics::OdeTolerance tol) {
  const detail::StartData s = detail::has_wall(model, side) ? detail::wall_start(model, E, side)
                                                            : detail::decaying_start(model, E, side);
  const double xs[] = {target};
  const auto out = propagate_pair(model, E, {s.psi, s.dpsi, 0.0, 0.0}, s.x, xs, tol);
  return {out[0][0], out[0][1]};
}

std::string at_energy(const PotentialModel& model, double E) {
  std::ostringstream os;
  os.precision(12);
  os << model.name() << " at E=" << E;
  return os.str();
}

double wrap_half_turn(double phi) {
  double r = std::remainder(phi, kPi);  // in [-pi/2, pi/2]
  if (r <= -0.5 * kPi) r += kPi;
  return r;
}

}  // namespace

std::vector<OdeState2> integrate_amplitude(const std::function<double(double)>& k2, double x0,
                                           double rho0, double drho0, std::span<const double> xs,
                                           numerics::OdeTolerance tol) {
  std::function<void(const OdeState2&, OdeState2&, double)> rhs =
      [&](const OdeState2& y, OdeState2& dy, double x) {
        const double r = y[0];
        dy[0] = y[1];
        dy[1] = 1.0 / (r * r * r) - k2(x) * r;
      };
  return numerics::integrate_through<OdeState2>(rhs, {rho0, drho0}, x0, xs, tol);
}

MilneSolution::MilneSolution(const PotentialModel& model, double E, numerics::OdeTolerance tol)
    : model_(model), E_(E), tp_(qhj::turning_points(model, E)), tol_(tol) {
  const double x1 = tp_.x1;
  const double x2 = tp_.x2;

  if (is_coulomb_s_wave(model_)) {
    // u: decays outward, u(x2) = 1. v: v(x2) = 0, v'(x2) = -1.
    const OdeState2 r = barrier_solution(model_, E_, Side::Right, x2, tol_);
    if (r[0] == 0.0) throw RepresentationError("outer solution vanishes at the turning point, " + at_energy(model_, E_));
    x0_ = 0.5 * x2;
    const double eps = 1e-8 * x2;
    constexpr int kProbe = 400;
    std::vector<double> xs;
    for (int i = kProbe - 1; i >= 1; --i) xs.push_back(eps + (x2 - eps) * i / kProbe);
    xs.push_back(eps);
    const auto path = propagate_pair(model_, E_, {1.0, r[1] / r[0], 0.0, -1.0}, x2, xs, tol_);
    double umax = 1.0;
    double vmax = 0.0;
    for (const auto& s : path) {
      umax = std::max(umax, std::abs(s[0]));
      vmax = std::max(vmax, std::abs(s[2]));
    }
    const double c = umax / vmax;
    // Wronskian u' w - u w' equals c at x2, so phi' = c / (u^2 + w^2).
    const double mid[] = {x0_};
    const OdeState4 m = propagate_pair(model_, E_, {1.0, r[1] / r[0], 0.0, -1.0}, x2, mid, tol_)[0];
    const double u = m[0];
    const double du = m[1];
    const double w = c * m[2];
    const double dw = c * m[3];
    rho0_ = std::sqrt((u * u + w * w) / c);
    drho0_ = (u * du + w * dw) / (c * rho0_);

    const double ends[] = {eps, x2};
    const auto s = integrate_from_init(ends);
    // Extend the phase from eps to r = 0, where 1/rho^2 stays finite.
    const double theta_eps = s[0].X;
    const double theta0 = theta_eps - eps / (s[0].rho * s[0].rho);
    theta_left_ = theta0;
    action_ = model_.hbar() * (s[1].X - theta0);
    offset_ = wrap_half_turn(0.5 * kPi - (s[1].X - theta0));
    return;
  }

  // u: solution from the left barrier with u(x1) = 1; v: v(x1) = 0, v'(x1) = 1.
  const OdeState2 l = barrier_solution(model_, E_, Side::Left, x1, tol_);
  if (l[0] == 0.0) throw RepresentationError("left solution vanishes at the turning point, " + at_energy(model_, E_));
  const double L1 = l[1] / l[0];

  double xm = model_.minimum_location();
  if (!(xm > x1 && xm < x2)) xm = 0.5 * (x1 + x2);
  x0_ = xm;
  const double pts[] = {x0_, x2};
  const auto pair = propagate_pair(model_, E_, {1.0, L1, 0.0, 1.0}, x1, pts, tol_);
  const double U = pair[1][0];
  const double dU = pair[1][1];
  const double V = pair[1][2];
  const double dV = pair[1][3];
  const double wr = U * dV - dU * V;

  const OdeState2 r = barrier_solution(model_, E_, Side::Right, x2, tol_);
  // Right solution as p u + q v.
  const double p = (r[0] * dV - r[1] * V) / wr;
  const double q = (U * r[1] - dU * r[0]) / wr;

  // w = u + beta v has phase pi/4 at x1 by construction; the right condition
  // p V beta^2 + 2 p U beta - 2 q U = 0 puts the right solution at phase
  // pi/4 before the next multiple of pi at x2.
  const double a = p * V;
  const double b = p * U;
  const double disc = b * (b + 2.0 * q * V);
  if (!(disc >= 0.0) || a == 0.0) {
    throw RepresentationError("no phase-consistent amplitude, " + at_energy(model_, E_));
  }
  const double beta = (-b - std::copysign(std::sqrt(disc), b)) / a;
  if (!(beta < 0.0) || !std::isfinite(beta)) {
    throw RepresentationError("phase would decrease across the well, " + at_energy(model_, E_));
  }

  const double u = pair[0][0];
  const double du = pair[0][1];
  const double w = u + beta * pair[0][2];
  const double dw = du + beta * pair[0][3];
  rho0_ = std::sqrt((u * u + w * w) / -beta);
  drho0_ = (u * du + w * dw) / (-beta * rho0_);

  const double ends[] = {x1, x2};
  const auto s = integrate_from_init(ends);
  theta_left_ = s[0].X;
  action_ = model_.hbar() * (s[1].X - s[0].X);
  offset_ = 0.25 * kPi;
}

// Raw phase relative to the init point in the X slot.
std::vector<AmplitudeSample> MilneSolution::integrate_from_init(std::span<const double> xs) const {
  std::vector<AmplitudeSample> out(xs.size());
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  for (std::size_t i = 0; i < xs.size(); ++i) (xs[i] < x0_ ? left : right).push_back(i);
  std::sort(left.begin(), left.end(), [&](auto a, auto b) { return xs[a] > xs[b]; });
  std::sort(right.begin(), right.end(), [&](auto a, auto b) { return xs[a] < xs[b]; });

  std::function<void(const OdeState3&, OdeState3&, double)> rhs =
      [this](const OdeState3& y, OdeState3& dy, double x) {
        const double r = y[0];
        const double k2 = model_.wave_number_squared(E_, x);
        dy[0] = y[1];
        dy[1] = 1.0 / (r * r * r) - k2 * r;
        dy[2] = 1.0 / (r * r);
      };
  for (const auto* idx : {&left, &right}) {
    if (idx->empty()) continue;
    std::vector<double> pts;
    pts.reserve(idx->size());
    for (auto i : *idx) pts.push_back(xs[i]);
    const auto states = numerics::integrate_through<OdeState3>(rhs, {rho0_, drho0_, 0.0}, x0_, pts, tol_);
    for (std::size_t j = 0; j < idx->size(); ++j) {
      const auto& s = states[j];
      if (!(s[0] > 0.0)) throw RepresentationError("amplitude lost positivity, " + at_energy(model_, E_));
      out[(*idx)[j]] = {pts[j], s[0], s[1], s[2]};
    }
  }
  return out;
}

std::vector<AmplitudeSample> MilneSolution::sample(std::span<const double> xs) const {
  auto out = integrate_from_init(xs);
  for (auto& s : out) s.X = model_.hbar() * (s.X - theta_left_);
  return out;
}

AmplitudeSample MilneSolution::at(double x) const {
  const double xs[] = {x};
  return sample(xs)[0];
}

std::vector<double> milne_amplitude(const PotentialModel& model, double E, const Grid& grid) {
  const MilneSolution sol(model, E);
  const auto xs = grid.abscissas();
  const auto s = sol.sample(xs);
  std::vector<double> rho(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) rho[i] = s[i].rho;
  return rho;
}

QhjFields qhj_fields(const PotentialModel& model, double E, const QhjFieldOptions& options) {
  auto sol = std::make_shared<const MilneSolution>(model, E, options.tolerance);
  const TurningPair tp = sol->turning_points();
  const double delta = options.margin * tp.width();

  QhjFields f(model);
  f.E = E;
  f.tp = tp;
  f.grid = {tp.x1 + delta, tp.x2 - delta, std::max<std::size_t>(options.n_points, 3)};
  f.x = f.grid.abscissas();
  const auto s = sol->sample(f.x);
  const std::size_t N = f.x.size();
  const double hb = model.hbar();
  const double two_m = 2.0 * model.mass();
  for (auto* v : {&f.X, &f.Xp, &f.Xpp, &f.Xppp, &f.Y, &f.F, &f.G, &f.p_classical, &f.W_classical}) {
    v->resize(N);
  }

  std::vector<double> gx;
  std::vector<double> gw;
  const auto& rule = numerics::gauss_legendre_96();
  for (std::size_t i = 0; i < N; ++i) {
    const double x = f.x[i];
    const double r = s[i].rho;
    const double dr = s[i].drho;
    const double k2 = model.wave_number_squared(E, x);
    const double ddr = 1.0 / (r * r * r) - k2 * r;
    const double r2 = r * r;
    const double r3 = r2 * r;
    f.X[i] = s[i].X;
    f.Xp[i] = hb / r2;
    f.Xpp[i] = -2.0 * hb * dr / r3;
    f.Xppp[i] = -2.0 * hb * (ddr / r3 - 3.0 * dr * dr / (r2 * r2));
    f.Y[i] = 0.5 * hb * std::log(f.Xp[i]);
    f.F[i] = k2 * r2 * r2 - 1.0;
    if (1.0 + f.F[i] > 0.0) {
      f.G[i] = std::sqrt(1.0 + f.F[i]) - 1.0;
    } else {
      f.G[i] = std::nan("");
      if (!f.undefined_at) f.undefined_at = x;
    }
    f.p_classical[i] = classical_momentum(model, E, x);
    numerics::endpoint_regularized_nodes(tp.x1, x, rule, gx, gw);
    double w = 0.0;
    for (std::size_t j = 0; j < gx.size(); ++j) {
      const double d = E - model(gx[j]);
      if (d > 0.0) w += gw[j] * std::sqrt(two_m * d);
    }
    f.W_classical[i] = w;
  }
  f.quantum_action = sol->action();
  f.phase_offset = sol->phase_offset();
  f.solution = std::move(sol);
  return f;
}

int node_count(const QhjFields& fields) {
  std::vector<double> shape(fields.x.size());
  const double hb = fields.model.hbar();
  for (std::size_t i = 0; i < shape.size(); ++i) {
    shape[i] = std::sin(fields.X[i] / hb + fields.phase_offset);
  }
  return count_nodes(shape);
}

std::vector<double> interpolate_state(const EigenState& state, std::span<const double> xs) {
  std::vector<double> out(xs.size());
  const double h = state.grid.spacing();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out[i] = numerics::interpolate_uniform(state.psi, state.grid.x_min, h, xs[i]);
  }
  return out;
}

std::vector<double> reconstruct_wavefunction(const QhjFields& fields, const EigenState& reference) {
  const double hb = fields.model.hbar();
  const std::size_t N = fields.x.size();
  std::vector<double> shape(N);
  for (std::size_t i = 0; i < N; ++i) {
    shape[i] = std::sin(fields.X[i] / hb + fields.phase_offset) / std::sqrt(fields.Xp[i]);
  }
  const auto ref = interpolate_state(reference, fields.x);
  const double lo = fields.tp.x1 + 0.05 * fields.tp.width();
  const double hi = fields.tp.x2 - 0.05 * fields.tp.width();
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    if (fields.x[i] < lo || fields.x[i] > hi) continue;
    num += shape[i] * ref[i];
    den += shape[i] * shape[i];
  }
  const double A = den > 0.0 ? num / den : 0.0;
  for (double& v : shape) v *= A;
  return shape;
}

std::vector<double> reconstruct_wavefunction(const QhjFields& fields) {
  return reconstruct_wavefunction(fields, eigenstate(fields.model, node_count(fields)));
}

double quantum_action_integral(const QhjFields& fields) { return fields.quantum_action; }

RouteAResidual residual_route_a(const QhjFields& fields, const PotentialModel& model) {
  if (fields.undefined_at) {
    std::ostringstream os;
    os << "1 + F <= 0 at x=" << *fields.undefined_at << "; G is undefined";
    throw UndefinedCorrectionError(*fields.undefined_at, os.str());
  }
  static const numerics::GaussLegendreRule rule = numerics::gauss_legendre(512);
  std::vector<double> xs;
  std::vector<double> ws;
  numerics::endpoint_regularized_nodes(fields.tp.x1, fields.tp.x2, rule, xs, ws);
  const auto s = fields.solution->sample(xs);
  const double hb = model.hbar();
  double R = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r2 = s[i].rho * s[i].rho;
    const double k2 = std::max(model.wave_number_squared(fields.E, xs[i]), 0.0);
    const double G = std::sqrt(k2) * r2 - 1.0;  // sqrt(1 + F) - 1 with 1 + F = k^2 rho^4
    R += ws[i] * (hb / r2) * G;
  }
  return {R, classical_action(model, fields.E) - fields.quantum_action};
}

std::vector<double> hamilton_jacobi_residual(const QhjFields& fields) {
  const double hb2 = fields.model.hbar() * fields.model.hbar();
  std::vector<double> out(fields.x.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double xp = fields.Xp[i];
    const double t1 = xp * xp;
    const double t2 = 3.0 * hb2 * fields.Xpp[i] * fields.Xpp[i] / (4.0 * xp * xp);
    const double t3 = hb2 * fields.Xppp[i] / (2.0 * xp);
    const double t4 = fields.p_classical[i] * fields.p_classical[i];
    out[i] = (t1 - t2 + t3 - t4) / (std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(t4));
  }
  return out;
}

std::vector<double> f_zeros(const QhjFields& fields) {
  std::vector<double> zeros;
  const auto& sol = *fields.solution;
  auto F = [&](double x) {
    const auto s = sol.at(x);
    const double k2 = fields.model.wave_number_squared(fields.E, x);
    return k2 * std::pow(s.rho, 4) - 1.0;
  };
  for (std::size_t i = 0; i + 1 < fields.x.size(); ++i) {
    const double a = fields.F[i];
    const double b = fields.F[i + 1];
    if (a == 0.0) {
      zeros.push_back(fields.x[i]);
    } else if ((a > 0.0) != (b > 0.0) && b != 0.0) {
      zeros.push_back(numerics::solve_bracketed(F, fields.x[i], fields.x[i + 1],
                                                1e-14 * fields.tp.width(), 0.0));
    }
  }
  return zeros;
}

double quantize_via_qhj(const PotentialModel& model, int n, double tolerance) {
  const double target = maslov_action(model, n);
  const double E0 = wkb_energy(model, n);
  const double spacing = kPi * model.hbar() / classical_action_slope(model, E0);
  const double threshold = model.continuum_threshold();
  const double floor = model.minimum_value();

  auto f = [&](double E) -> std::optional<double> {
    if (E >= threshold || E <= floor) return std::nullopt;
    try {
      return MilneSolution(model, E).action() - target;
    } catch (const RepresentationError&) {
      return std::nullopt;
    } catch (const NoTurningPointsError&) {
      return std::nullopt;
    }
  };

  // The representation exists only in a window around each eigenvalue, which
  // need not contain the semiclassical level. Scan outward from it on a fine
  // lattice and stop at the first sign change between defined neighbours.
  constexpr int kPerSpacing = 32;
  constexpr int kReach = 2 * kPerSpacing;
  const double step = spacing / kPerSpacing;
  std::map<int, double> values;
  auto probe = [&](int k) -> std::optional<std::pair<double, double>> {
    const auto v = f(E0 + k * step);
    if (!v) return std::nullopt;
    values[k] = *v;
    for (int nb : {k - 1, k + 1}) {
      auto it = values.find(nb);
      if (it != values.end() && ((it->second > 0.0) != (*v > 0.0) || *v == 0.0)) {
        const double a = E0 + std::min(k, nb) * step;
        return std::pair{a, a + step};
      }
    }
    return std::nullopt;
  };
  std::optional<std::pair<double, double>> bracket;
  for (int k = 0; k <= kReach && !bracket; ++k) {
    bracket = probe(k);
    if (!bracket && k > 0) bracket = probe(-k);
  }
  if (!bracket) {
    std::ostringstream os;
    os << "could not bracket the quantization condition for " << model.name() << " n=" << n;
    throw ScanExhaustedError("qhje", os.str());
  }
  return numerics::solve_bracketed(
      [&](double E) {
        const auto v = f(E);
        if (!v) throw ScanExhaustedError("qhje", "representation lost inside the bracket, " + at_energy(model, E));
        return *v;
      },
      bracket->first, bracket->second, 1e-3 * tolerance, 0.0);
}

}  // namespace qhj
