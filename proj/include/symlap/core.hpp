#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symlap {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

constexpr Complex conjugate(Complex z) noexcept { return {z.real(), -z.imag()}; }

/// |f(t)| <= M e^{a|t|} on one half-line.
struct ExponentialOrderBound {
  double M = 1.0;
  double a = 0.0;
};

/// Half-line piece of a signal. `fn` takes |t|-side arguments in their
/// natural sign: the positive piece is called with t >= 0, the negative piece
/// with t < 0 (and with -0.0 for the one-sided limit at the origin).
struct HalfLine {
  std::function<Complex(double)> fn;
  ExponentialOrderBound bound;
  /// Nonzero for polynomially growing pieces, |f(t)| <= M e^{a|t|} + C|t|^k.
  /// The exponential bound is then chosen per damping, see `effective_bound`.
  int poly_degree = 0;
  double poly_constant = 1.0;
  /// Optional second envelope with a < 0 that certifies absolute
  /// integrability at zero damping (e.g. e^{-t^2} <= e * e^{-2|t|}).
  std::optional<ExponentialOrderBound> decay;
};

/// A function on the real line given as two half-line pieces. H(0) = 1: the
/// value at t = 0 belongs to the positive piece.
struct PiecewiseSignal {
  std::string name;
  HalfLine pos;
  HalfLine neg;

  bool real_valued = true;

  Complex operator()(double t) const { return t >= 0.0 ? pos.fn(t) : neg.fn(t); }
};

/// Transform-domain point (x1, x2, y).
struct SLPoint {
  double x1 = 0.0;
  double x2 = 0.0;
  double y = 0.0;
};

struct TransformSample {
  SLPoint point;
  Complex value;
  double abs_error_estimate = 0.0;
};

/// Bound that governs the integrand e^{-x|t|} f(t) on one half-line at damping
/// x. For polynomial pieces the rate sits halfway between max(a, 0) and x.
/// Returns nullopt when no admissible bound exists (x <= a).
std::optional<ExponentialOrderBound> effective_bound(const HalfLine& side, double x);

/// Names accepted by `catalog_signal`, in catalog order.
const std::vector<std::string>& catalog_names();

/// Built-in signals. `frequency` parameterizes sincos and cossin and is
/// ignored by the others.
PiecewiseSignal catalog_signal(std::string_view name, double frequency = 1.0);

/// Linear combination alpha*f + beta*g. Bounds are combined conservatively.
PiecewiseSignal combine(const PiecewiseSignal& f, Complex alpha, const PiecewiseSignal& g,
                        Complex beta);

}  // namespace symlap

namespace symlap {

/// d^order/dt^order of e^{-t^2} for order 0, 1, 2, with matching envelopes.
/// Not part of the named catalog; used to exercise the derivative rules.
PiecewiseSignal gauss_derivative_signal(int order);

}  // namespace symlap
