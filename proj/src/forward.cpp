#include "symlap/forward.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "symlap/error.hpp"
#include "symlap/quadrature.hpp"

namespace symlap {

namespace {

ExponentialOrderBound require_bound(const HalfLine& side, double x, const char* which,
                                    const std::string& name) {
  if (auto b = effective_bound(side, x)) return *b;
  throw DivergenceError("signal '" + name + "': damping " + std::to_string(x) + " on the " + which +
                        " half-line is outside the region of convergence (growth rate " +
                        std::to_string(side.bound.a) + ")");
}

}  // namespace

TransformSample sl_forward(const PiecewiseSignal& f, const SLPoint& p, double tol) {
  const auto pos_bound = require_bound(f.pos, p.x1, "positive", f.name);
  const auto neg_bound = require_bound(f.neg, p.x2, "negative", f.name);

  // at least eight panels per period of e^{-iyt}
  const double cap = std::min(1.0, std::numbers::pi / (4.0 * (std::abs(p.y) + 1.0)));

  const Complex s_pos{p.x1, p.y};
  const Complex s_neg{p.x2, -p.y};
  const auto& pos_fn = f.pos.fn;
  const auto& neg_fn = f.neg.fn;
  const auto right = quadrature::half_line_integral(
      [&](double t) { return std::exp(-s_pos * t) * pos_fn(t); }, pos_bound, p.x1, 0.5 * tol, cap);
  const auto left = quadrature::half_line_integral(
      [&](double u) { return std::exp(-s_neg * u) * neg_fn(-u); }, neg_bound, p.x2, 0.5 * tol, cap);

  return {p, right.value + left.value, right.abs_error_estimate + left.abs_error_estimate};
}

TransformSample sl_forward_symmetric(const PiecewiseSignal& f, Complex s, double tol) {
  return sl_forward(f, {s.real(), s.real(), s.imag()}, tol);
}

TransformSample fourier_reduction(const PiecewiseSignal& f, double y, double tol) {
  for (const auto* side : {&f.pos, &f.neg}) {
    if (!effective_bound(*side, 0.0)) {
      throw DivergenceError("signal '" + f.name +
                            "' is not certified absolutely integrable; no Fourier transform");
    }
  }
  return sl_forward(f, {0.0, 0.0, y}, tol);
}

}  // namespace symlap
