#include "qhj/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include "qhj/errors.hpp"

namespace qhj::numerics {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre order must be >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

const GaussLegendreRule& gauss_legendre_96() {
  static const GaussLegendreRule rule = gauss_legendre(96);
  return rule;
}

void endpoint_regularized_nodes(double x1, double x2, const GaussLegendreRule& rule,
                                std::vector<double>& xs, std::vector<double>& ws) {
  const double L = x2 - x1;
  const double half = 0.25 * std::numbers::pi;  // t in [0, pi/2]
  xs.resize(rule.nodes.size());
  ws.resize(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = half * (rule.nodes[i] + 1.0);
    const double s = std::sin(t);
    const double c = std::cos(t);
    xs[i] = x1 + L * s * s;
    ws[i] = rule.weights[i] * half * 2.0 * L * s * c;
  }
}

double integrate_endpoint_regularized(const std::function<double(double)>& f, double x1, double x2,
                                      const GaussLegendreRule& rule) {
  std::vector<double> xs;
  std::vector<double> ws;
  endpoint_regularized_nodes(x1, x2, rule, xs, ws);
  double sum = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) sum += ws[i] * f(xs[i]);
  return sum;
}

double solve_bracketed(const std::function<double(double)>& f, double lo, double hi, double abs_tol,
                       double rel_tol, int max_iter) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::invalid_argument("solve_bracketed: root is not bracketed");
  }
  auto tol = [abs_tol, rel_tol](double a, double b) {
    return std::abs(b - a) <= abs_tol + rel_tol * std::max(std::abs(a), std::abs(b));
  };
  std::uintmax_t iters = static_cast<std::uintmax_t>(max_iter);
  auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
  return 0.5 * (a + b);
}

double simpson(std::span<const double> y, double h) {
  const std::size_t n = y.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * h * (y[0] + y[1]);
  const std::size_t intervals = n - 1;
  std::size_t simpson_end = intervals % 2 == 0 ? n - 1 : n - 4;
  double sum = 0.0;
  if (intervals % 2 == 1 && intervals < 3) return 0.5 * h * (y[0] + y[1]);
  for (std::size_t i = 0; i + 2 <= simpson_end; i += 2) {
    sum += h / 3.0 * (y[i] + 4.0 * y[i + 1] + y[i + 2]);
  }
  if (intervals % 2 == 1) {
    const std::size_t j = n - 4;
    sum += 3.0 * h / 8.0 * (y[j] + 3.0 * y[j + 1] + 3.0 * y[j + 2] + y[j + 3]);
  }
  return sum;
}

std::vector<double> cumulative_simpson(std::span<const double> y, double h) {
  const std::size_t n = y.size();
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  for (std::size_t i = 2; i < n; i += 2) {
    out[i] = out[i - 2] + h / 3.0 * (y[i - 2] + 4.0 * y[i - 1] + y[i]);
  }
  // Odd points: Simpson's value at i-1 plus a three-point quadratic increment.
  for (std::size_t i = 1; i < n; i += 2) {
    if (i + 1 < n) {
      out[i] = out[i - 1] + h / 12.0 * (5.0 * y[i - 1] + 8.0 * y[i] - y[i + 1]);
    } else {
      out[i] = out[i - 1] + h / 12.0 * (-y[i - 2] + 8.0 * y[i - 1] + 5.0 * y[i]);
    }
  }
  return out;
}

double interpolate_uniform(std::span<const double> y, double x0, double h, double x) {
  const std::size_t n = y.size();
  if (n == 0) throw std::invalid_argument("interpolate_uniform: empty samples");
  if (n < 4) {
    const double s = std::clamp((x - x0) / h, 0.0, static_cast<double>(n - 1));
    const std::size_t i = std::min(static_cast<std::size_t>(s), n - 2);
    const double f = s - static_cast<double>(i);
    return n == 1 ? y[0] : (1.0 - f) * y[i] + f * y[i + 1];
  }
  const double s = (x - x0) / h;
  long i0 = static_cast<long>(std::floor(s)) - 1;
  i0 = std::clamp(i0, 0L, static_cast<long>(n) - 4);
  double result = 0.0;
  for (int j = 0; j < 4; ++j) {
    double basis = 1.0;
    for (int k = 0; k < 4; ++k) {
      if (k == j) continue;
      basis *= (s - static_cast<double>(i0 + k)) / static_cast<double>(j - k);
    }
    result += basis * y[static_cast<std::size_t>(i0 + j)];
  }
  return result;
}

template <class State>
std::vector<State> integrate_through(const std::function<void(const State&, State&, double)>& rhs,
                                     State y0, double x0, std::span<const double> xs,
                                     OdeTolerance tol) {
  namespace odeint = boost::numeric::odeint;
  std::vector<State> out;
  if (xs.empty()) return out;

  // Abscissas within round-off of x0 take the initial state; a step that
  // small cannot be represented by the stepper.
  const double snap = 1e-13 * std::max({std::abs(x0), std::abs(xs.back() - x0), 1e-300});
  std::size_t at_start = 0;
  while (at_start < xs.size() && std::abs(xs[at_start] - x0) <= snap) ++at_start;
  if (at_start == xs.size()) return std::vector<State>(xs.size(), y0);

  std::vector<double> times;
  times.reserve(xs.size() + 1);
  times.push_back(x0);
  times.insert(times.end(), xs.begin() + static_cast<std::ptrdiff_t>(at_start), xs.end());
  const double span = std::abs(times.back() - x0);
  const double dir = times.back() > x0 ? 1.0 : -1.0;
  const double initial_step = dir * span / 64.0;

  auto system = [&rhs](const State& y, State& dy, double x) { rhs(y, dy, x); };
  for (int halving = 0; halving <= 10; ++halving) {
    out.clear();
    out.reserve(times.size());
    State y = y0;
    try {
      auto stepper = odeint::make_dense_output(tol.abs, tol.rel, odeint::runge_kutta_dopri5<State>());
      odeint::integrate_times(
          stepper, system, y, times.begin(), times.end(), initial_step / std::ldexp(1.0, halving),
          [&out](const State& s, double) { out.push_back(s); }, odeint::max_step_checker(2000000));
    } catch (const odeint::step_adjustment_error&) {
      continue;
    } catch (const odeint::no_progress_error&) {
      continue;
    }
    for (const auto& s : out) {
      for (double v : s) {
        if (!std::isfinite(v)) throw StepUnderflowError("ODE solution became non-finite");
      }
    }
    out.erase(out.begin());
    out.insert(out.begin(), at_start, y0);
    return out;
  }
  throw StepUnderflowError("adaptive step size fell below the floor (initial step / 1024)");
}

template std::vector<OdeState2> integrate_through<OdeState2>(
    const std::function<void(const OdeState2&, OdeState2&, double)>&, OdeState2, double,
    std::span<const double>, OdeTolerance);
template std::vector<OdeState3> integrate_through<OdeState3>(
    const std::function<void(const OdeState3&, OdeState3&, double)>&, OdeState3, double,
    std::span<const double>, OdeTolerance);
template std::vector<OdeState4> integrate_through<OdeState4>(
    const std::function<void(const OdeState4&, OdeState4&, double)>&, OdeState4, double,
    std::span<const double>, OdeTolerance);

}  // namespace qhj::numerics
