#pragma once

#include <string_view>

#include "symlap/core.hpp"

namespace symlap {

/// Error function, absolute error below 1e-12 on the whole line. Uses the
/// positive-term series e^{-x^2} sum (2x^2)^n x / (2n+1)!! for |x| <= 3 and
/// the erfc continued fraction beyond.
double erf(double x);
/// 1 - erf(x), accurate in the tail.
double erfc(double x);

// Heat problem u_xx = u_t on the line, u(x, 0) = sign(x), u(0, t) = 0.

/// erf(x / (2 sqrt t)) for x >= 0 and -erf(-x / (2 sqrt t)) for x < 0.
/// Throws DomainError for t <= 0.
double heat_solution(double x, double t);

/// |D2x u - D1t u| with central differences of step h; needs t > h.
double heat_residual(double x, double t, double h);

/// G(s, t) + G~(conj s, t): the half-line transforms of u(., t) and u(-., t).
Complex heat_symmetric_transform(Complex s, double t, double tol);

/// |s^2 G + conj(s)^2 G~ - (G_t + G~_t)| with G, G~ by quadrature and the time
/// derivatives by central differences. Throws DivergenceError for Re s <= 0.
double heat_transform_identity(Complex s, double t, double tol);

// ODE y'' + y = f with f = e^t (t >= 0), 1 (t < 0), y(0) = 0.

double ode_solution(double t);
/// Analytic derivative of the given order (0, 1 or 2).
double ode_derivative(double t, int order);
/// One-sided limit at the origin of the derivative of the given order.
double ode_limit_at_zero(int order, bool from_right);
/// |y''(t) + y(t) - f(t)|, evaluated in extended precision.
double ode_residual(double t);

/// Closed-form half-line transforms read off the transformed equation.
Complex ode_positive_transform(Complex s);
Complex ode_negative_transform(Complex s_bar);
/// Text of the same split transform, for the expression pipeline.
inline constexpr std::string_view kOdeTransformExpression =
    "1/2/(s-1) - 1/2*s/(s^2+1) - 1/2/(s^2+1) + 1/cs - cs/(cs^2+1)";

/// Worst mismatch between quadrature and the closed forms above at s.
/// Throws DivergenceError for Re s <= 1.
double ode_transform_check(Complex s, double tol);

}  // namespace symlap
