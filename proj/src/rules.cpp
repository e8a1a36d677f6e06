#include "symlap/rules.hpp"

#include <string>

#include "symlap/error.hpp"
#include "symlap/forward.hpp"
#include "symlap/quadrature.hpp"

namespace symlap {

TransformPair derivative_rule(const TransformPair& tp, const BoundaryData& bd, int n) {
  if (n < 1) throw CatalogError("derivative order must be >= 1");
  if (bd.right_values.size() != static_cast<std::size_t>(n) ||
      bd.left_values.size() != static_cast<std::size_t>(n)) {
    throw CatalogError("boundary data must hold " + std::to_string(n) + " one-sided values per side");
  }
  auto pos = [p = tp.pos, right = bd.right_values, n](Complex s) {
    Complex acc = std::pow(s, n) * p(s);
    for (int k = 0; k < n; ++k) acc -= std::pow(s, n - 1 - k) * right[static_cast<std::size_t>(k)];
    return acc;
  };
  auto neg = [q = tp.neg, left = bd.left_values, n](Complex sb) {
    Complex acc = std::pow(-sb, n) * q(sb);
    for (int k = 0; k < n; ++k) acc += std::pow(-sb, n - 1 - k) * left[static_cast<std::size_t>(k)];
    return acc;
  };
  return {pos, neg};
}

TransformPair quadrature_pair(const PiecewiseSignal& f, double tol) {
  auto pos = [f, tol](Complex s) {
    auto b = effective_bound(f.pos, s.real());
    if (!b) throw DivergenceError("positive half-line of '" + f.name + "' diverges at Re s = " +
                                  std::to_string(s.real()));
    return quadrature::half_line_integral([&](double t) { return std::exp(-s * t) * f.pos.fn(t); }, *b,
                                          s.real(), tol)
        .value;
  };
  auto neg = [f, tol](Complex sb) {
    auto b = effective_bound(f.neg, sb.real());
    if (!b) throw DivergenceError("negative half-line of '" + f.name + "' diverges at Re s = " +
                                  std::to_string(sb.real()));
    return quadrature::half_line_integral([&](double u) { return std::exp(-sb * u) * f.neg.fn(-u); }, *b,
                                          sb.real(), tol)
        .value;
  };
  return {pos, neg};
}

double check_rule_consistency(const PiecewiseSignal& f, const PiecewiseSignal& fprime,
                              const BoundaryData& bd, int n, Complex s, double tol) {
  // Quadrature runs well below tol so that multiplication by s^n keeps the
  // comparison meaningful.
  const double inner = 1e-3 * tol;
  const Complex direct = sl_forward_symmetric(fprime, s, inner).value;
  const Complex ruled = derivative_rule(quadrature_pair(f, inner), bd, n).symmetric(s);
  return std::abs(direct - ruled);
}

BoundaryData continuous_boundary(const std::vector<Complex>& values_at_zero) {
  return {values_at_zero, values_at_zero};
}

}  // namespace symlap
