#pragma once

#include <functional>
#include <vector>

#include "symlap/core.hpp"

namespace symlap {

/// Images of the two half-line Laplace transforms: pos(s) = L(f(t))(s) and
/// neg(s_bar) = L(f(-t))(s_bar).
struct TransformPair {
  std::function<Complex(Complex)> pos;
  std::function<Complex(Complex)> neg;

  /// pos(s) + neg(conj(s)), the symmetric transform at x1 = x2.
  Complex symmetric(Complex s) const { return pos(s) + neg(conjugate(s)); }
};

/// One-sided limits f(0+), f'(0+), ... and f(0-), f'(0-), ...
struct BoundaryData {
  std::vector<Complex> right_values;
  std::vector<Complex> left_values;
};

/// Image of the n-th derivative:
///   pos: s^n P(s) - sum_k s^{n-1-k} f^{(k)}(0+)
///   neg: (-s)^n N(s) + sum_k (-s)^{n-1-k} f^{(k)}(0-)
/// Throws CatalogError when the boundary sequences are not of length n.
TransformPair derivative_rule(const TransformPair& tp, const BoundaryData& bd, int n);

/// Quadrature-backed pair for a signal at tolerance `tol` per half-line.
TransformPair quadrature_pair(const PiecewiseSignal& f, double tol);

/// |SL(f^{(n)})(s) - rule image at s|, both sides by quadrature. `fprime` is
/// the analytic n-th derivative, `bd` the one-sided limits of f..f^{(n-1)}.
double check_rule_consistency(const PiecewiseSignal& f, const PiecewiseSignal& fprime,
                              const BoundaryData& bd, int n, Complex s, double tol);

/// Boundary data of a signal that is C^{n-1} at the origin, derived from the
/// values f^{(k)}(0) it was given.
BoundaryData continuous_boundary(const std::vector<Complex>& values_at_zero);

}  // namespace symlap
