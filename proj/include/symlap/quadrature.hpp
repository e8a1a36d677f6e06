#pragma once

#include <cstddef>
#include <functional>

#include "symlap/core.hpp"

namespace symlap::quadrature {

using Integrand = std::function<Complex(double)>;

struct QuadratureResult {
  Complex value;
  double abs_error_estimate = 0.0;
  /// Upper end of the integrated range for half-line integrals; the interval
  /// end otherwise.
  double truncation_point = 0.0;
  std::size_t evaluations = 0;
};

/// Integrands are evaluated at most this many times before AccuracyError.
inline constexpr std::size_t kEvaluationBudget = std::size_t{1} << 20;

/// Largest panel width used by `finite_oscillatory_integral` when the
/// oscillation-aware cap pi / (4(|t| + 1)) is looser.
inline constexpr double kOscillatoryPanelCap = 0.5;

/// T such that the tail bound M e^{-(x-a)T} / (x-a) equals tol, clamped to 0.
/// Throws DivergenceError when x <= a.
double truncation_point(const ExponentialOrderBound& bound, double x, double tol);

/// Adaptive GK15 integral of `f` over [a, b] until the summed panel error
/// estimate is at most `tol`. Panels never exceed `max_panel_width`.
///
/// Refinement is level-synchronous: every pass bisects each panel whose error
/// exceeds its length-proportional share of `tol`, and the freshly created
/// panels are evaluated in parallel. Sums run in panel order, so the result is
/// bit-identical for any OpenMP thread count.
QuadratureResult integrate_interval(const Integrand& f, double a, double b, double tol,
                                    double max_panel_width);

/// Integral over [0, inf) of an integrand with |integrand(t)| <= M e^{-(x-a)t}.
/// Half the tolerance goes to truncation, half to discretization.
QuadratureResult half_line_integral(const Integrand& integrand, const ExponentialOrderBound& bound,
                                    double x, double tol, double max_panel_width = 1.0);

/// (1 / 2pi) * integral_{-A}^{A} F(y) e^{iyt} dy. Only the discretization error
/// is estimated; truncation in A is the caller's concern.
QuadratureResult finite_oscillatory_integral(const Integrand& F, double t, double A, double tol);

namespace serial {

/// Reference integrator: recursive GK15 bisection with the tolerance halved
/// at each level. Single-threaded; kept to cross-check the panel kernel.
QuadratureResult integrate_interval(const Integrand& f, double a, double b, double tol,
                                    double max_panel_width);

}  // namespace serial

/// One GK15 panel: Kronrod value and |K15 - G7|.
struct PanelEstimate {
  Complex value;
  double error = 0.0;
};
PanelEstimate gauss_kronrod_15(const Integrand& f, double a, double b);

}  // namespace symlap::quadrature
