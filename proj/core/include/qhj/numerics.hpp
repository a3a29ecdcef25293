#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qhj::numerics {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Newton iteration on P_n with the asymptotic initial guess; nodes accurate to
/// a few ulp for n up to several hundred.
GaussLegendreRule gauss_legendre(int n);

/// The 96-point rule, computed once.
const GaussLegendreRule& gauss_legendre_96();

/// Integrates f over [x1, x2] after the change of variables
/// x = x1 + (x2 - x1) sin^2 t, t in [0, pi/2]. The Jacobian
/// 2 (x2 - x1) sin t cos t cancels square-root (and r^{-1/2}) endpoint
/// singularities at both ends.
double integrate_endpoint_regularized(const std::function<double(double)>& f, double x1, double x2,
                                      const GaussLegendreRule& rule = gauss_legendre_96());

/// Abscissas and effective weights of the regularized rule on [x1, x2], so
/// callers can evaluate integrands in bulk.
void endpoint_regularized_nodes(double x1, double x2, const GaussLegendreRule& rule,
                                std::vector<double>& xs, std::vector<double>& ws);

/// Root of a bracketed scalar function (TOMS 748, a Brent-class method).
/// Requires f(lo) and f(hi) of opposite sign; stops when the bracket is below
/// abs_tol + rel_tol * |x|.
double solve_bracketed(const std::function<double(double)>& f, double lo, double hi, double abs_tol,
                       double rel_tol = 0.0, int max_iter = 200);

/// Composite Simpson on uniform samples; an even number of intervals uses
/// Simpson throughout, an odd count finishes with a 3/8 panel.
double simpson(std::span<const double> y, double h);

/// Cumulative trapezoid-corrected Simpson integral starting at 0.
std::vector<double> cumulative_simpson(std::span<const double> y, double h);

/// Four-point Lagrange interpolation on a uniform grid starting at x0.
double interpolate_uniform(std::span<const double> y, double x0, double h, double x);

using OdeState2 = std::array<double, 2>;
using OdeState3 = std::array<double, 3>;
using OdeState4 = std::array<double, 4>;

struct OdeTolerance {
  double abs = 1e-13;
  double rel = 1e-12;
};

/// Integrates dy/dx = rhs(y, x) from x0 through the strictly monotone
/// abscissas `xs` (increasing or decreasing, all on one side of x0) with an
/// adaptive Dormand-Prince 5(4) dense-output stepper. Returns the state at each
/// abscissa. On step-control failure the initial step is halved and the
/// integration retried, down to initial_step / 1024; below that a
/// StepUnderflowError is thrown.
template <class State>
std::vector<State> integrate_through(const std::function<void(const State&, State&, double)>& rhs,
                                     State y0, double x0, std::span<const double> xs,
                                     OdeTolerance tol = {});

extern template std::vector<OdeState2> integrate_through<OdeState2>(
    const std::function<void(const OdeState2&, OdeState2&, double)>&, OdeState2, double,
    std::span<const double>, OdeTolerance);
extern template std::vector<OdeState3> integrate_through<OdeState3>(
    const std::function<void(const OdeState3&, OdeState3&, double)>&, OdeState3, double,
    std::span<const double>, OdeTolerance);
extern template std::vector<OdeState4> integrate_through<OdeState4>(
    const std::function<void(const OdeState4&, OdeState4&, double)>&, OdeState4, double,
    std::span<const double>, OdeTolerance);

}  // namespace qhj::numerics
