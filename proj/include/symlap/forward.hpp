#pragma once

#include "symlap/core.hpp"

namespace symlap {

/// SL(f)(x1, x2, y) = L(f(t))(x1 + iy) + L(f(-t))(x2 - iy).
///
/// Each half-line is integrated with half of `tol`. Throws DivergenceError
/// naming the offending side when x1 or x2 does not exceed that side's growth
/// rate.
TransformSample sl_forward(const PiecewiseSignal& f, const SLPoint& p, double tol);

/// Same transform at x1 = x2 = Re s, y = Im s.
TransformSample sl_forward_symmetric(const PiecewiseSignal& f, Complex s, double tol);

/// Fourier transform, i.e. the transform at zero damping. Requires both sides
/// to carry a decaying envelope.
TransformSample fourier_reduction(const PiecewiseSignal& f, double y, double tol);

}  // namespace symlap
