#include <doctest.h>

#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "oracles.hpp"
#include "symlap/error.hpp"
#include "symlap/quadrature.hpp"

using namespace symlap;
using namespace symlap::quadrature;

TEST_CASE("truncation point follows the tail bound") {
  // ln(1 / 1e-10) / 1
  CHECK(truncation_point({1.0, 0.0}, 1.0, 1e-10) == doctest::Approx(10.0 * std::log(10.0)));
  CHECK(truncation_point({1.0, 0.0}, 1.0, 1e-10) == doctest::Approx(23.026).epsilon(1e-4));
  CHECK(truncation_point({1.0, 0.0}, 1.0, 1.0) == 0.0);
  CHECK_THROWS_AS(truncation_point({1.0, 2.0}, 1.0, 1e-8), DivergenceError);
  CHECK_THROWS_AS(truncation_point({1.0, 1.0}, 1.0, 1e-8), DivergenceError);
}

TEST_CASE("half-line integrals with known values") {
  const double tol = 1e-10;
  SUBCASE("e^{-t}") {
    const auto r = half_line_integral([](double t) { return Complex(std::exp(-t)); }, {1.0, 0.0}, 1.0, tol);
    CHECK(std::abs(r.value - 1.0) <= tol);
    CHECK(std::abs(r.value - 1.0) <= r.abs_error_estimate + 1e-15);
    CHECK(r.evaluations > 0);
    CHECK(r.truncation_point > 20.0);
  }
  SUBCASE("t e^{-2t}") {
    // |t e^{-2t}| <= (1/e) e^{-t}
    const auto r = half_line_integral([](double t) { return Complex(t * std::exp(-2 * t)); },
                                      {1.0 / std::numbers::e, 0.0}, 1.0, tol);
    CHECK(std::abs(r.value - 0.25) <= tol);
  }
  SUBCASE("e^{-t} sin t against a fine Simpson run") {
    const auto f = [](double t) { return Complex(std::exp(-t) * std::sin(t)); };
    const auto simpson = oracle::simpson(f, 0.0, 60.0, 200000);
    CHECK(std::abs(simpson - 0.5) < 1e-12);
    const auto r = half_line_integral(f, {1.0, 0.0}, 1.0, tol);
    CHECK(std::abs(r.value - simpson) <= tol);
  }
}

TEST_CASE("half-line integral: tail already below tolerance") {
  const auto r = half_line_integral([](double t) { return Complex(std::exp(-t)); }, {1.0, 0.0}, 1.0, 2.0);
  CHECK(r.evaluations > 0);
  CHECK(std::abs(r.value - 1.0) <= r.abs_error_estimate);
}

TEST_CASE("finite oscillatory integral examples") {
  SUBCASE("F = 1, t = 0, A = pi") {
    const auto r = finite_oscillatory_integral([](double) { return Complex(1.0); }, 0.0, std::numbers::pi, 1e-12);
    CHECK(std::abs(r.value - 1.0) < 1e-12);
  }
  SUBCASE("Lorentzian to A = 1000") {
    const auto r = finite_oscillatory_integral([](double y) { return Complex(1.0 / (1.0 + y * y)); }, 0.0, 1e3, 1e-10);
    const double exact = std::atan(1e3) / std::numbers::pi;
    CHECK(std::abs(r.value - exact) <= 1e-10);
    CHECK(std::abs(r.value - 0.5) < 2e-3);
  }
  SUBCASE("F = 1, t = pi, A = 1") {
    // (1/2pi) * 2 sin(A t) / t
    const double exact = std::sin(std::numbers::pi) / (std::numbers::pi * std::numbers::pi);
    const auto r = finite_oscillatory_integral([](double) { return Complex(1.0); }, std::numbers::pi, 1.0, 1e-12);
    CHECK(std::abs(r.value - exact) <= 1e-12);
    CHECK(std::abs(r.value) < 1e-12);
  }
}

TEST_CASE("oscillatory integral: doubling A moves the result by less than the error estimates") {
  // F(y) = e^{-|y|} is absolutely integrable, so the truncated tail at A >= 40 is negligible.
  const auto F = [](double y) { return Complex(std::exp(-std::abs(y))); };
  for (double t : {0.0, 0.7, -3.0}) {
    const auto a = finite_oscillatory_integral(F, t, 40.0, 1e-10);
    const auto b = finite_oscillatory_integral(F, t, 80.0, 1e-10);
    CHECK(std::abs(a.value - b.value) <= a.abs_error_estimate + b.abs_error_estimate + 1e-15);
    // (1/2pi) * 2/(1+t^2)
    CHECK(std::abs(b.value - 1.0 / (std::numbers::pi * (1.0 + t * t))) <= 1e-10);
  }
}

TEST_CASE("quadrature is linear within combined error estimates") {
  const auto f = [](double t) { return Complex(std::exp(-t) * std::cos(3 * t), std::exp(-2 * t)); };
  const auto g = [](double t) { return Complex(t * std::exp(-t), 0.0); };
  const Complex alpha(0.3, -1.2);
  const Complex beta(-2.0, 0.5);
  const double tol = 1e-9;
  const auto rf = half_line_integral(f, {1.5, 0.0}, 1.0, tol);
  // t e^{-t} <= (2/e) e^{-t/2}
  const auto rg = half_line_integral(g, {2.0 / std::numbers::e, 0.0}, 0.5, tol);
  const auto rc = half_line_integral([&](double t) { return alpha * f(t) + beta * g(t); },
                                     {std::abs(alpha) * 1.5 + std::abs(beta) * 2.0 / std::numbers::e, 0.0}, 0.5, tol);
  const double budget = std::abs(alpha) * rf.abs_error_estimate + std::abs(beta) * rg.abs_error_estimate +
                        rc.abs_error_estimate;
  CHECK(std::abs(rc.value - (alpha * rf.value + beta * rg.value)) <= budget);
}

TEST_CASE("error estimate covers the true error on closed-form cases") {
  struct Case {
    std::function<Complex(double)> f;
    double a, b, exact;
  };
  const Case cases[] = {
      {[](double x) { return Complex(std::sqrt(x)); }, 0.0, 1.0, 2.0 / 3.0},
      {[](double x) { return Complex(std::cos(20 * x)); }, 0.0, 3.0, std::sin(60.0) / 20.0},
      {[](double x) { return Complex(1.0 / (1.0 + 25 * x * x)); }, -1.0, 1.0, 0.4 * std::atan(5.0)},
  };
  for (const auto& c : cases) {
    for (double tol : {1e-6, 1e-10}) {
      const auto r = integrate_interval(c.f, c.a, c.b, tol, 1.0);
      CHECK(std::abs(r.value - c.exact) <= r.abs_error_estimate + 1e-15);
      CHECK(r.abs_error_estimate <= tol);
      const auto s = serial::integrate_interval(c.f, c.a, c.b, tol, 1.0);
      CHECK(std::abs(s.value - c.exact) <= s.abs_error_estimate + 1e-15);
      CHECK(std::abs(r.value - s.value) <= r.abs_error_estimate + s.abs_error_estimate + 1e-15);
    }
  }
}

TEST_CASE("panel kernel is bit-identical across thread counts") {
#ifdef _OPENMP
  const auto f = [](double y) { return Complex(1.0 / (1.0 + y * y)) * std::polar(1.0, 2.0 * y); };
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto a = integrate_interval(f, -200.0, 200.0, 1e-10, 0.1);
  omp_set_num_threads(4);
  const auto b = integrate_interval(f, -200.0, 200.0, 1e-10, 0.1);
  omp_set_num_threads(saved);
  CHECK(a.value == b.value);
  CHECK(a.abs_error_estimate == b.abs_error_estimate);
  CHECK(a.evaluations == b.evaluations);
#endif
}

TEST_CASE("evaluation budget exhaustion fails loudly") {
  // Pseudo-random noise never settles, whatever the panel size.
  const auto noise = [](double x) {
    const double v = std::sin(12345.678 * x) * 43758.5453;
    return Complex(v - std::floor(v));
  };
  CHECK_THROWS_AS(integrate_interval(noise, 0.0, 1.0, 1e-12, 1.0), AccuracyError);
  // Too many mandatory panels.
  CHECK_THROWS_AS(finite_oscillatory_integral([](double) { return Complex(1.0); }, 1e4, 1e4, 1e-8), AccuracyError);
}

TEST_CASE("integrand exceptions propagate out of the parallel loop") {
  const auto bad = [](double x) -> Complex {
    if (x > 0.5) throw NumericError("boom");
    return 1.0;
  };
  CHECK_THROWS_AS(integrate_interval(bad, 0.0, 100.0, 1e-8, 0.5), NumericError);
  CHECK_THROWS_AS(integrate_interval([](double) { return Complex(NAN); }, 0.0, 1.0, 1e-8, 1.0), NumericError);
}
