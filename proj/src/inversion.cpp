#include "symlap/inversion.hpp"

#include <cmath>
#include <string>

#include "symlap/error.hpp"
#include "symlap/quadrature.hpp"

namespace symlap {

namespace {

constexpr double kExponentLimit = 700.0;

// First `count` coefficients of the power series a(h) / b(h), b(0) != 0.
std::vector<Complex> series_divide(const Polynomial& a, const Polynomial& b, int count) {
  std::vector<Complex> q(static_cast<std::size_t>(count));
  const Complex b0 = b.coefficient(0);
  for (int k = 0; k < count; ++k) {
    Complex acc = a.coefficient(k);
    for (int j = 1; j <= k; ++j) acc -= b.coefficient(j) * q[static_cast<std::size_t>(k - j)];
    q[static_cast<std::size_t>(k)] = acc / b0;
  }
  return q;
}

}  // namespace

std::vector<PartialFractionTerm> partial_fractions(const RationalFunction& r) {
  if (!r.is_proper()) {
    throw PropernessError("rational function " + r.to_string("s") +
                          " is not strictly proper; it has no inverse in the rational table");
  }
  std::vector<PartialFractionTerm> terms;
  if (r.is_zero()) return terms;

  const auto roots = polynomial_roots(r.den());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const auto& [pole, m] = roots[i];
    Polynomial rest = Polynomial::constant(1.0);
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == i) continue;
      for (int k = 0; k < roots[j].multiplicity; ++k) rest = rest * Polynomial::linear_factor(roots[j].value);
    }
    // num(s) / rest(s) expanded around the pole gives the coefficients of
    // (s - pole)^{-m}, ..., (s - pole)^{-1} in that order.
    const auto series = series_divide(r.num().taylor_shift(pole), rest.taylor_shift(pole), m);
    for (int k = 0; k < m; ++k) terms.push_back({pole, m - k, series[static_cast<std::size_t>(k)]});
  }
  return terms;
}

Complex inverse_laplace_rational(const std::vector<PartialFractionTerm>& terms, double t) {
  if (t < 0.0) throw DomainError("inverse Laplace table needs t >= 0");
  Complex total{};
  for (const auto& term : terms) {
    if (std::abs(term.pole) * t > kExponentLimit) {
      throw NumericError("exponential overflow: |pole| * t = " + std::to_string(std::abs(term.pole) * t));
    }
    const double k = term.order - 1;
    total += term.coefficient * std::pow(t, k) * std::exp(term.pole * t) / std::tgamma(k + 1.0);
  }
  return total;
}

Complex sl_inverse_split(const SplitTransform& st, double t) {
  if (t >= 0.0) return inverse_laplace_rational(partial_fractions(st.g1), t);
  return inverse_laplace_rational(partial_fractions(st.g2), -t);
}

namespace {

std::pair<Complex, double> invert_once(const TransformFunction& F, double x1, double x2, double t, double A,
                                       double tol) {
  const double damping = t >= 0.0 ? x1 : -x2;
  const double prefactor = std::exp(damping * t);
  const auto r = quadrature::finite_oscillatory_integral(
      [&](double y) { return F(SLPoint{x1, x2, y}); }, t, A, tol / prefactor);
  return {prefactor * r.value, prefactor * r.abs_error_estimate};
}

}  // namespace

Complex sl_inverse_numeric(const TransformFunction& F, double x1, double x2, double t, double A, double tol) {
  return invert_once(F, x1, x2, t, A, tol).first;
}

NumericInversion sl_inverse_numeric_report(const TransformFunction& F, double x1, double x2, double t,
                                           double A, double tol) {
  const auto [full, err] = invert_once(F, x1, x2, t, A, tol);
  const auto half = invert_once(F, x1, x2, t, 0.5 * A, tol).first;
  return {full, err, std::abs(full - half)};
}

}  // namespace symlap
