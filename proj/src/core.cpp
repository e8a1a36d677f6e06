#include "symlap/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "symlap/error.hpp"

namespace symlap {

namespace {

HalfLine constant_side(Complex c) {
  return {[c](double) { return c; }, {std::abs(c), 0.0}, 0, 1.0, std::nullopt};
}

}  // namespace

std::optional<ExponentialOrderBound> effective_bound(const HalfLine& side, double x) {
  if (side.poly_degree == 0) {
    if (x > side.bound.a) return side.bound;
    if (side.decay && x > side.decay->a) return side.decay;
    return std::nullopt;
  }
  // |f(t)| <= M e^{a t} + C t^k. Pick the rate halfway between max(a, 0) and
  // x, then sup_t C t^k e^{-rate t} = C (k / (e rate))^k.
  const double floor_rate = std::max(side.bound.a, 0.0);
  if (!(x > floor_rate)) return std::nullopt;
  const double rate = floor_rate + 0.5 * (x - floor_rate);
  const double k = side.poly_degree;
  return ExponentialOrderBound{side.bound.M + side.poly_constant * std::pow(k / (std::numbers::e * rate), k),
                               rate};
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"sign",   "one",    "heaviside", "ramp",
                                              "sincos", "cossin", "ode_rhs",   "gauss"};
  return names;
}

PiecewiseSignal catalog_signal(std::string_view name, double frequency) {
  PiecewiseSignal f;
  f.name = std::string(name);
  const double w = frequency;

  if (name == "sign") {
    f.pos = constant_side(1.0);
    f.neg = constant_side(-1.0);
  } else if (name == "one") {
    f.pos = constant_side(1.0);
    f.neg = constant_side(1.0);
  } else if (name == "heaviside") {
    f.pos = constant_side(1.0);
    f.neg = constant_side(0.0);
    f.neg.decay = ExponentialOrderBound{0.0, -1.0};
  } else if (name == "ramp") {
    f.pos = {[](double t) { return Complex(t); }, {0.0, 0.0}, 1, 1.0, std::nullopt};
    f.neg = {[](double t) { return Complex(t); }, {0.0, 0.0}, 1, 1.0, std::nullopt};
  } else if (name == "sincos") {
    f.pos = {[w](double t) { return Complex(std::sin(w * t)); }, {1.0, 0.0}, 0, 1.0, std::nullopt};
    f.neg = {[w](double t) { return Complex(std::cos(w * t)); }, {1.0, 0.0}, 0, 1.0, std::nullopt};
  } else if (name == "cossin") {
    f.pos = {[w](double t) { return Complex(std::cos(w * t)); }, {1.0, 0.0}, 0, 1.0, std::nullopt};
    f.neg = {[w](double t) { return Complex(std::sin(w * t)); }, {1.0, 0.0}, 0, 1.0, std::nullopt};
  } else if (name == "ode_rhs") {
    f.pos = {[](double t) { return Complex(std::exp(t)); }, {1.0, 1.0}, 0, 1.0, std::nullopt};
    f.neg = constant_side(1.0);
  } else if (name == "gauss") {
    // e^{-t^2} <= e^{1 - 2|t|} since (|t| - 1)^2 >= 0
    const auto g = [](double t) { return Complex(std::exp(-t * t)); };
    const ExponentialOrderBound decay{std::numbers::e, -2.0};
    f.pos = {g, {1.0, 0.0}, 0, 1.0, decay};
    f.neg = {g, {1.0, 0.0}, 0, 1.0, decay};
  } else {
    std::string valid;
    for (const auto& n : catalog_names()) {
      if (!valid.empty()) valid += ", ";
      valid += n;
    }
    throw CatalogError("unknown signal '" + std::string(name) + "'; valid names: " + valid);
  }
  return f;
}

PiecewiseSignal combine(const PiecewiseSignal& f, Complex alpha, const PiecewiseSignal& g,
                        Complex beta) {
  const auto merge = [&](const HalfLine& p, const HalfLine& q) {
    HalfLine out;
    out.fn = [pf = p.fn, qf = q.fn, alpha, beta](double t) { return alpha * pf(t) + beta * qf(t); };
    out.bound = {std::abs(alpha) * p.bound.M + std::abs(beta) * q.bound.M,
                 std::max(p.bound.a, q.bound.a)};
    out.poly_degree = std::max(p.poly_degree, q.poly_degree);
    out.poly_constant = (p.poly_degree > 0 ? std::abs(alpha) * p.poly_constant : 0.0) +
                        (q.poly_degree > 0 ? std::abs(beta) * q.poly_constant : 0.0);
    if (p.decay && q.decay) {
      out.decay = ExponentialOrderBound{std::abs(alpha) * p.decay->M + std::abs(beta) * q.decay->M,
                                        std::max(p.decay->a, q.decay->a)};
    }
    return out;
  };
  PiecewiseSignal out;
  out.name = f.name + "+" + g.name;
  out.pos = merge(f.pos, g.pos);
  out.neg = merge(f.neg, g.neg);
  out.real_valued = f.real_valued && g.real_valued && alpha.imag() == 0.0 && beta.imag() == 0.0;
  return out;
}

}  // namespace symlap

namespace symlap {

PiecewiseSignal gauss_derivative_signal(int order) {
  if (order == 0) return catalog_signal("gauss");
  std::function<Complex(double)> fn;
  double M = 1.0;
  if (order == 1) {
    fn = [](double t) { return Complex(-2.0 * t * std::exp(-t * t)); };
    M = 1.0;  // max |2t e^{-t^2}| = sqrt(2/e)
  } else if (order == 2) {
    fn = [](double t) { return Complex((4.0 * t * t - 2.0) * std::exp(-t * t)); };
    M = 2.0;
  } else {
    throw CatalogError("gauss derivative order must be 0, 1 or 2");
  }
  PiecewiseSignal f;
  f.name = "gauss_d" + std::to_string(order);
  f.pos = {fn, {M, 0.0}, 0, 1.0, std::nullopt};
  f.neg = {fn, {M, 0.0}, 0, 1.0, std::nullopt};
  return f;
}

}  // namespace symlap
