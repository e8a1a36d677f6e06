#include "symlap/applications.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "symlap/error.hpp"
#include "symlap/quadrature.hpp"

namespace symlap {

namespace {

// Continued fraction erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
// evaluated with the modified Lentz algorithm. x > 0.
double erfc_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double f = x;
  double C = x;
  double D = 0.0;
  for (int k = 1; k < 500; ++k) {
    const double a = 0.5 * k;
    D = x + a * D;
    if (std::abs(D) < tiny) D = tiny;
    C = x + a / C;
    if (std::abs(C) < tiny) C = tiny;
    D = 1.0 / D;
    const double delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x * x) / (std::sqrt(std::numbers::pi) * f);
}

double erf_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= 2.0 * x2 / (2.0 * n + 1.0);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return 2.0 / std::sqrt(std::numbers::pi) * std::exp(-x2) * sum;
}

constexpr double kSeriesLimit = 3.0;
// erfc switches earlier so that its relative accuracy survives the subtraction
constexpr double kFractionLimit = 2.0;

template <typename Real>
Real ode_branch(Real t, int order) {
  using std::cos, std::exp, std::sin;
  if (t >= 0) {
    const Real e = exp(t) / 2;
    const Real c = cos(t) / 2;
    const Real s = sin(t) / 2;
    switch (order) {
      case 0: return e - c - s;
      case 1: return e + s - c;
      default: return e + c + s;
    }
  }
  switch (order) {
    case 0: return 1 - cos(t);
    case 1: return sin(t);
    default: return cos(t);
  }
}

}  // namespace

double erf(double x) {
  if (std::isnan(x)) return x;
  const double ax = std::abs(x);
  const double v = ax <= kSeriesLimit ? erf_series(ax) : 1.0 - erfc_continued_fraction(ax);
  return x < 0 ? -v : v;
}

double erfc(double x) {
  if (x > kFractionLimit) return erfc_continued_fraction(x);
  if (x < -kFractionLimit) return 2.0 - erfc_continued_fraction(-x);
  return 1.0 - erf(x);
}

double heat_solution(double x, double t) {
  if (!(t > 0.0)) throw DomainError("heat solution needs t > 0, got " + std::to_string(t));
  const double scale = 2.0 * std::sqrt(t);
  return x >= 0.0 ? erf(x / scale) : -erf(-x / scale);
}

double heat_residual(double x, double t, double h) {
  if (!(h > 0.0) || !(t > h)) throw DomainError("heat residual needs 0 < h < t");
  const double u = heat_solution(x, t);
  const double uxx = (heat_solution(x + h, t) - 2.0 * u + heat_solution(x - h, t)) / (h * h);
  const double ut = (heat_solution(x, t + h) - heat_solution(x, t - h)) / (2.0 * h);
  return std::abs(uxx - ut);
}

Complex heat_symmetric_transform(Complex s, double t, double tol) {
  if (!(s.real() > 0.0)) throw DivergenceError("heat transform needs Re s > 0");
  const ExponentialOrderBound bound{1.0, 0.0};
  const Complex sb = conjugate(s);
  const auto right = quadrature::half_line_integral(
      [&](double x) { return std::exp(-s * x) * heat_solution(x, t); }, bound, s.real(), 0.5 * tol);
  const auto left = quadrature::half_line_integral(
      [&](double x) { return std::exp(-sb * x) * heat_solution(-x, t); }, bound, sb.real(), 0.5 * tol);
  return right.value + left.value;
}

double heat_transform_identity(Complex s, double t, double tol) {
  if (!(s.real() > 0.0)) throw DivergenceError("heat transform needs Re s > 0");
  const double dt = std::min(1e-3, 0.25 * t);
  const double qtol = 1e-4 * tol * dt;
  const ExponentialOrderBound bound{1.0, 0.0};
  const Complex sb = conjugate(s);

  const auto G = [&](double tau) {
    return quadrature::half_line_integral(
               [&](double x) { return std::exp(-s * x) * heat_solution(x, tau); }, bound, s.real(), qtol)
        .value;
  };
  const auto Gt = [&](double tau) {
    return quadrature::half_line_integral(
               [&](double x) { return std::exp(-sb * x) * heat_solution(-x, tau); }, bound, sb.real(), qtol)
        .value;
  };
  const Complex lhs = s * s * G(t) + sb * sb * Gt(t);
  const Complex rhs = (G(t + dt) - G(t - dt) + Gt(t + dt) - Gt(t - dt)) / (2.0 * dt);
  return std::abs(lhs - rhs);
}

double ode_solution(double t) { return ode_branch(t, 0); }

double ode_derivative(double t, int order) {
  if (order < 0 || order > 2) throw DomainError("ode derivative order must be 0, 1 or 2");
  return ode_branch(t, order);
}

double ode_limit_at_zero(int order, bool from_right) {
  if (order < 0 || order > 2) throw DomainError("ode derivative order must be 0, 1 or 2");
  if (from_right) return ode_branch(0.0, order);
  // The t < 0 branch is analytic through 0; evaluate its formula there.
  switch (order) {
    case 0: return 1.0 - std::cos(0.0);
    case 1: return std::sin(0.0);
    default: return std::cos(0.0);
  }
}

double ode_residual(double t) {
  const long double lt = t;
  const long double forcing = t >= 0.0 ? std::exp(lt) : 1.0L;
  return static_cast<double>(std::abs(ode_branch(lt, 2) + ode_branch(lt, 0) - forcing));
}

Complex ode_positive_transform(Complex s) {
  return 0.5 / (s - 1.0) - 0.5 * s / (s * s + 1.0) - 0.5 / (s * s + 1.0);
}

Complex ode_negative_transform(Complex s_bar) { return 1.0 / s_bar - s_bar / (s_bar * s_bar + 1.0); }

double ode_transform_check(Complex s, double tol) {
  if (!(s.real() > 1.0)) {
    throw DivergenceError("ode transform needs Re s > 1 (e^t forcing), got Re s = " + std::to_string(s.real()));
  }
  const Complex sb = conjugate(s);
  const double qtol = 1e-2 * tol;
  const auto right = quadrature::half_line_integral(
      [&](double t) { return std::exp(-s * t) * ode_solution(t); }, {1.5, 1.0}, s.real(), qtol);
  const auto left = quadrature::half_line_integral(
      [&](double u) { return std::exp(-sb * u) * ode_solution(-u); }, {2.0, 0.0}, sb.real(), qtol);
  return std::max(std::abs(right.value - ode_positive_transform(s)),
                  std::abs(left.value - ode_negative_transform(sb)));
}

}  // namespace symlap
