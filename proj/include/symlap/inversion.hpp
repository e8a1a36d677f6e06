#pragma once

#include <functional>
#include <vector>

#include "symlap/core.hpp"
#include "symlap/expr.hpp"
#include "symlap/polynomial.hpp"

namespace symlap {

/// coefficient / (s - pole)^order
struct PartialFractionTerm {
  Complex pole;
  int order = 1;
  Complex coefficient;
};

/// Partial-fraction expansion of a strictly proper rational function. Poles
/// come from polynomial_roots; coefficients from the Taylor expansion of
/// num / (den / (s - pole)^m) at each pole. Throws PropernessError otherwise.
std::vector<PartialFractionTerm> partial_fractions(const RationalFunction& r);

/// Sum of c t^{k-1} e^{a t} / (k-1)! over the terms; t >= 0.
/// Throws NumericError when |a| t > 700.
Complex inverse_laplace_rational(const std::vector<PartialFractionTerm>& terms, double t);

/// f(t) = L^{-1}(g1)(t) for t >= 0 and L^{-1}(g2)(-t) for t < 0.
Complex sl_inverse_split(const SplitTransform& st, double t);

/// Transform-domain function F(x1, x2, y).
using TransformFunction = std::function<Complex(const SLPoint&)>;

/// Default truncation of the inversion integral.
inline constexpr double kDefaultTruncation = 1000.0;

/// e^{(x1 H(t) - x2 H(-t)) t} (1/2pi) integral_{-A}^{A} F(x1, x2, y) e^{iyt} dy,
/// which tends to (f(t+) + f(t-)) / 2 as A grows.
Complex sl_inverse_numeric(const TransformFunction& F, double x1, double x2, double t, double A,
                           double tol);

struct NumericInversion {
  Complex value;
  /// Discretization error of the truncated integral, already scaled by the
  /// exponential prefactor.
  double quadrature_error = 0.0;
  /// |result(A) - result(A/2)|, the proxy for the truncation error in A.
  double truncation_sensitivity = 0.0;
};

/// sl_inverse_numeric plus its error diagnostics.
NumericInversion sl_inverse_numeric_report(const TransformFunction& F, double x1, double x2, double t,
                                           double A, double tol);

}  // namespace symlap
