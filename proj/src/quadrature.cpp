#include "symlap/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <vector>

#include "symlap/error.hpp"

namespace symlap::quadrature {

namespace {

// Kronrod abscissae on [0, 1); odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  PanelEstimate est;
};

void check_finite(Complex v, double a, double b) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw NumericError("non-finite integrand on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
  }
}

// Evaluates panels[first..] in parallel. Exceptions thrown by the integrand
// are captured and the one from the lowest panel index is rethrown.
void evaluate_panels(const Integrand& f, std::vector<Panel>& panels, std::size_t first) {
  const auto n = static_cast<std::ptrdiff_t>(panels.size() - first);
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) if (n >= 32)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    auto& p = panels[first + static_cast<std::size_t>(k)];
    try {
      p.est = gauss_kronrod_15(f, p.a, p.b);
    } catch (...) {
      failures[static_cast<std::size_t>(k)] = std::current_exception();
    }
  }
  for (const auto& e : failures) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

PanelEstimate gauss_kronrod_15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const Complex fc = f(center);
  Complex kronrod = fc * kKronrodWeights[7];
  Complex gauss = fc * kGaussWeights[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kNodes[j];
    const Complex pair = f(center - dx) + f(center + dx);
    kronrod += pair * kKronrodWeights[j];
    if (j % 2 == 1) gauss += pair * kGaussWeights[j / 2];
  }
  kronrod *= half;
  gauss *= half;
  check_finite(kronrod, a, b);
  return {kronrod, std::abs(kronrod - gauss)};
}

double truncation_point(const ExponentialOrderBound& bound, double x, double tol) {
  const double rate = x - bound.a;
  if (!(rate > 0.0)) {
    throw DivergenceError("damping " + std::to_string(x) + " does not exceed growth rate " +
                          std::to_string(bound.a));
  }
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (bound.M <= 0.0) return 0.0;
  return std::max(0.0, std::log(bound.M / (tol * rate)) / rate);
}

QuadratureResult integrate_interval(const Integrand& f, double a, double b, double tol,
                                    double max_panel_width) {
  if (!(b > a)) return {Complex{}, 0.0, b, 0};
  const double length = b - a;
  const auto initial = static_cast<std::size_t>(std::max(1.0, std::ceil(length / max_panel_width)));
  if (initial * 15 > kEvaluationBudget) {
    throw AccuracyError("panel count for [" + std::to_string(a) + ", " + std::to_string(b) +
                            "] exceeds the evaluation budget",
                        0.0, INFINITY);
  }

  std::vector<Panel> panels(initial);
  const double width = length / static_cast<double>(initial);
  for (std::size_t i = 0; i < initial; ++i) {
    panels[i].a = a + width * static_cast<double>(i);
    panels[i].b = i + 1 == initial ? b : a + width * static_cast<double>(i + 1);
  }
  evaluate_panels(f, panels, 0);
  std::size_t evaluations = 15 * initial;

  for (;;) {
    Complex total{};
    double error = 0.0;
    for (const auto& p : panels) {
      total += p.est.value;
      error += p.est.error;
    }
    if (error <= tol) return {total, error, b, evaluations};

    std::vector<Panel> next;
    next.reserve(panels.size() * 2);
    std::vector<Panel> fresh;
    std::vector<std::size_t> fresh_slot;
    for (const auto& p : panels) {
      const double share = tol * (p.b - p.a) / length;
      const double mid = 0.5 * (p.a + p.b);
      const bool splittable = mid > p.a && mid < p.b;
      if (p.est.error > share && splittable) {
        fresh_slot.push_back(next.size());
        next.push_back({p.a, mid, {}});
        next.push_back({mid, p.b, {}});
      } else {
        next.push_back(p);
      }
    }
    if (fresh_slot.empty() || evaluations + 30 * fresh_slot.size() > kEvaluationBudget) {
      throw AccuracyError("quadrature on [" + std::to_string(a) + ", " + std::to_string(b) +
                              "] did not reach tolerance " + std::to_string(tol) +
                              " (estimate " + std::to_string(error) + ")",
                          total, error);
    }

    // Gather the new halves contiguously so one parallel loop covers them.
    fresh.reserve(2 * fresh_slot.size());
    for (const auto slot : fresh_slot) {
      fresh.push_back(next[slot]);
      fresh.push_back(next[slot + 1]);
    }
    evaluate_panels(f, fresh, 0);
    for (std::size_t k = 0; k < fresh_slot.size(); ++k) {
      next[fresh_slot[k]] = fresh[2 * k];
      next[fresh_slot[k] + 1] = fresh[2 * k + 1];
    }
    evaluations += 15 * fresh.size();
    panels = std::move(next);
  }
}

namespace serial {

namespace {

struct Recursion {
  const Integrand& f;
  std::size_t evaluations = 0;
  double error = 0.0;
  Complex value{};
  bool exhausted = false;

  void run(double a, double b, double tol, const PanelEstimate& est, int depth) {
    if (est.error <= tol || depth >= 60) {
      exhausted = exhausted || est.error > tol;
      value += est.value;
      error += est.error;
      return;
    }
    if (evaluations + 30 > kEvaluationBudget) {
      exhausted = true;
      value += est.value;
      error += est.error;
      return;
    }
    const double mid = 0.5 * (a + b);
    const auto left = gauss_kronrod_15(f, a, mid);
    const auto right = gauss_kronrod_15(f, mid, b);
    evaluations += 30;
    run(a, mid, 0.5 * tol, left, depth + 1);
    run(mid, b, 0.5 * tol, right, depth + 1);
  }
};

}  // namespace

QuadratureResult integrate_interval(const Integrand& f, double a, double b, double tol,
                                    double max_panel_width) {
  if (!(b > a)) return {Complex{}, 0.0, b, 0};
  const auto pieces = static_cast<std::size_t>(std::max(1.0, std::ceil((b - a) / max_panel_width)));
  const double width = (b - a) / static_cast<double>(pieces);
  Recursion r{f};
  for (std::size_t i = 0; i < pieces; ++i) {
    const double lo = a + width * static_cast<double>(i);
    const double hi = i + 1 == pieces ? b : a + width * static_cast<double>(i + 1);
    const auto est = gauss_kronrod_15(f, lo, hi);
    r.evaluations += 15;
    r.run(lo, hi, tol / static_cast<double>(pieces), est, 0);
  }
  if (r.exhausted) {
    throw AccuracyError("serial quadrature did not reach tolerance", r.value, r.error);
  }
  return {r.value, r.error, b, r.evaluations};
}

}  // namespace serial

QuadratureResult half_line_integral(const Integrand& integrand, const ExponentialOrderBound& bound,
                                    double x, double tol, double max_panel_width) {
  double upper = truncation_point(bound, x, 0.5 * tol);
  const double rate = x - bound.a;
  if (upper == 0.0) upper = 1.0 / rate;
  const double tail = bound.M * std::exp(-rate * upper) / rate;
  auto r = integrate_interval(integrand, 0.0, upper, 0.5 * tol, max_panel_width);
  r.abs_error_estimate += tail;
  r.truncation_point = upper;
  return r;
}

QuadratureResult finite_oscillatory_integral(const Integrand& F, double t, double A, double tol) {
  if (!(A > 0.0)) throw DomainError("truncation A must be positive");
  const double cap = std::min(kOscillatoryPanelCap, std::numbers::pi / (4.0 * (std::abs(t) + 1.0)));
  const double scale = 1.0 / (2.0 * std::numbers::pi);
  const Integrand g = [&F, t](double y) { return F(y) * std::polar(1.0, y * t); };
  auto r = integrate_interval(g, -A, A, tol / scale, cap);
  r.value *= scale;
  r.abs_error_estimate *= scale;
  return r;
}

}  // namespace symlap::quadrature
