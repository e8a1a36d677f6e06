#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "symlap/error.hpp"
#include "symlap/expr.hpp"
#include "symlap/forward.hpp"
#include "symlap/inversion.hpp"
#include "symlap/polynomial.hpp"

using namespace symlap;

namespace {

Polynomial from_roots(std::initializer_list<Complex> roots) {
  Polynomial p = Polynomial::constant(1.0);
  for (const auto& r : roots) p = p * Polynomial::linear_factor(r);
  return p;
}

const Root* find_root(const std::vector<Root>& roots, Complex z, double tol = 1e-10) {
  for (const auto& r : roots) {
    if (std::abs(r.value - z) <= tol) return &r;
  }
  return nullptr;
}

Complex sum_terms(const std::vector<PartialFractionTerm>& terms, Complex s) {
  Complex acc{};
  for (const auto& t : terms) acc += t.coefficient / std::pow(s - t.pole, t.order);
  return acc;
}

}  // namespace

TEST_CASE("roots of small polynomials") {
  SUBCASE("s^2 + 1") {
    const auto r = polynomial_roots(Polynomial({1.0, 0.0, 1.0}));
    REQUIRE(r.size() == 2);
    REQUIRE(find_root(r, Complex(0, 1)));
    REQUIRE(find_root(r, Complex(0, -1)));
    CHECK(find_root(r, Complex(0, 1))->multiplicity == 1);
  }
  SUBCASE("s^2") {
    const auto r = polynomial_roots(Polynomial({0.0, 0.0, 1.0}));
    REQUIRE(r.size() == 1);
    CHECK(r[0].value == Complex(0.0));
    CHECK(r[0].multiplicity == 2);
  }
  SUBCASE("s^2 + 3s + 2 against the quadratic formula") {
    const double b = 3.0;
    const double c = 2.0;
    const double disc = std::sqrt(b * b - 4 * c);
    const auto r = polynomial_roots(Polynomial({c, b, 1.0}));
    REQUIRE(r.size() == 2);
    CHECK(find_root(r, (-b + disc) / 2));
    CHECK(find_root(r, (-b - disc) / 2));
  }
}

TEST_CASE("multiple roots are clustered") {
  const auto p = from_roots({Complex(0, 1), Complex(0, 1), Complex(0, -1), Complex(0, -1), 1.0});
  const auto r = polynomial_roots(p);
  REQUIRE(r.size() == 3);
  CHECK(find_root(r, Complex(0, 1))->multiplicity == 2);
  CHECK(find_root(r, Complex(0, -1))->multiplicity == 2);
  CHECK(find_root(r, 1.0)->multiplicity == 1);

  const auto triple = polynomial_roots(from_roots({-2.0, -2.0, -2.0, 0.5}));
  REQUIRE(triple.size() == 2);
  CHECK(find_root(triple, -2.0, 1e-9)->multiplicity == 3);
}

TEST_CASE("close but distinct roots stay apart") {
  const auto r = polynomial_roots(from_roots({1.0, 1.0 + 1e-4, -3.0}));
  CHECK(r.size() == 3);
}

TEST_CASE("roots reconstruct the monic polynomial") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int degree = 1 + static_cast<int>(rng() % 8);
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = Complex(d(rng), d(rng));
    const Polynomial p(c);
    const auto roots = polynomial_roots(p);
    int total = 0;
    for (const auto& r : roots) {
      total += r.multiplicity;
      CHECK(std::abs(p(r.value)) <= 1e-10 * p.magnitude_at(r.value));
    }
    CHECK(total == degree);
    for (int k = 0; k < 20; ++k) {
      const Complex z(d(rng), d(rng));
      Complex prod = 1.0;
      for (const auto& r : roots) prod *= std::pow(z - r.value, r.multiplicity);
      const Complex monic = p(z) / p.leading();
      CHECK(std::abs(prod - monic) <= 1e-9 * std::max(1.0, std::abs(monic)));
    }
  }
  CHECK_THROWS_AS(polynomial_roots(Polynomial::constant(2.0)), DomainError);
}

TEST_CASE("partial fractions examples") {
  SUBCASE("1/(s^2+1)") {
    const auto terms = partial_fractions(parse_transform("1/(s^2+1)").g1);
    REQUIRE(terms.size() == 2);
    for (const auto& t : terms) {
      CHECK(t.order == 1);
      // residue 1/(2 pole)
      CHECK(std::abs(t.coefficient - 1.0 / (2.0 * t.pole)) < 1e-14);
    }
    const auto up = std::find_if(terms.begin(), terms.end(), [](auto& t) { return t.pole.imag() > 0; });
    CHECK(std::abs(up->pole - Complex(0, 1)) < 1e-14);
    CHECK(std::abs(up->coefficient - Complex(0, -0.5)) < 1e-14);
  }
  SUBCASE("(2s+3)/((s+1)(s+2)) by cover-up") {
    const auto terms = partial_fractions(parse_transform("(2*s+3)/((s+1)*(s+2))").g1);
    REQUIRE(terms.size() == 2);
    for (const auto& t : terms) {
      // cover-up: (2a+3)/(a - other)
      const Complex other = std::abs(t.pole + 1.0) < 1e-9 ? -2.0 : -1.0;
      CHECK(std::abs(t.coefficient - (2.0 * t.pole + 3.0) / (t.pole - other)) < 1e-13);
      CHECK(std::abs(t.coefficient - 1.0) < 1e-13);
    }
  }
  SUBCASE("1/s^2") {
    const auto terms = partial_fractions(parse_transform("1/s^2").g1);
    const auto top = std::find_if(terms.begin(), terms.end(), [](auto& t) { return t.order == 2; });
    REQUIRE(top != terms.end());
    CHECK(top->pole == Complex(0.0));
    CHECK(top->coefficient == Complex(1.0));
    for (const auto& t : terms) {
      if (t.order == 1) CHECK(t.coefficient == Complex(0.0));
    }
  }
  CHECK_THROWS_AS(partial_fractions(parse_transform("s/(s+1)").g1), PropernessError);
  CHECK_THROWS_AS(partial_fractions(parse_transform("3").g1), PropernessError);
  CHECK(partial_fractions(RationalFunction{}).empty());
}

TEST_CASE("partial fractions reproduce the rational function") {
  const char* exprs[] = {"1/(s^2+1)", "(2*s+3)/((s+1)*(s+2))", "(s^2 - 2)/((s-1)^2*(s+3)*(s^2+4))",
                         "(1+i)/(s^3 - i)", "s/(s^2+1)^2"};
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  for (const auto* text : exprs) {
    const auto r = parse_transform(text).g1;
    const auto terms = partial_fractions(r);
    CAPTURE(text);
    for (int k = 0; k < 20; ++k) {
      const Complex z(d(rng), d(rng));
      const Complex exact = evaluate_rational(r, z);
      CHECK(std::abs(sum_terms(terms, z) - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("inverse Laplace table") {
  CHECK(std::abs(inverse_laplace_rational({{1.0, 1, 1.0}}, 1.0) - std::numbers::e) < 1e-15);
  CHECK(inverse_laplace_rational({{0.0, 2, 1.0}}, 3.0) == Complex(3.0));
  const auto cos_terms = partial_fractions(parse_transform("s/(s^2+1)").g1);
  CHECK(std::abs(inverse_laplace_rational(cos_terms, std::numbers::pi) - (-1.0)) < 1e-14);
  // t^2 e^{-t} / 2
  CHECK(std::abs(inverse_laplace_rational({{-1.0, 3, 1.0}}, 2.0) - 2.0 * std::exp(-2.0)) < 1e-15);
  CHECK_THROWS_AS(inverse_laplace_rational({{1.0, 1, 1.0}}, 800.0), NumericError);
  CHECK_THROWS_AS(inverse_laplace_rational({{1.0, 1, 1.0}}, -1.0), DomainError);
}

TEST_CASE("cos round trip through the forward transform") {
  // L^{-1}(s/(s^2+1)) = cos t on t >= 0; transform cos t forward and compare.
  PiecewiseSignal cos_signal = catalog_signal("cossin", 1.0);
  cos_signal.neg = catalog_signal("heaviside").neg;
  const Complex s(1.5, 0.7);
  const auto fwd = sl_forward_symmetric(cos_signal, s, 1e-10).value;
  CHECK(std::abs(fwd - s / (s * s + 1.0)) < 1e-9);
}

TEST_CASE("split inversion of the worked expressions") {
  const auto ramp = parse_transform("1/s^2 - 1/cs^2");
  CHECK(std::abs(sl_inverse_split(ramp, 2.0) - 2.0) < 1e-12);
  CHECK(std::abs(sl_inverse_split(ramp, -3.0) - (-3.0)) < 1e-12);

  const auto one = parse_transform("1/s + 1/cs");
  CHECK(std::abs(sl_inverse_split(one, 5.0) - 1.0) < 1e-12);
  CHECK(std::abs(sl_inverse_split(one, -5.0) - 1.0) < 1e-12);

  const auto sign = parse_transform("1/s - 1/cs");
  CHECK(std::abs(sl_inverse_split(sign, 1.0) - 1.0) < 1e-12);
  CHECK(std::abs(sl_inverse_split(sign, -1.0) - (-1.0)) < 1e-12);

  CHECK_THROWS_AS(sl_inverse_split(parse_transform("s + 1/cs"), 1.0), PropernessError);
  // Zero g2 inverts to zero on t < 0.
  CHECK(sl_inverse_split(parse_transform("1/(s+1)"), -2.0) == Complex(0.0));
}

TEST_CASE("symbolic round trip: forward transform of the recovered signal") {
  struct Case {
    const char* expr;
    const char* signal;
  };
  const Case cases[] = {{"1/s^2 - 1/cs^2", "ramp"}, {"1/s + 1/cs", "one"}, {"1/s - 1/cs", "sign"}};
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> re(0.5, 3.0);
  std::uniform_real_distribution<double> im(-4.0, 4.0);
  for (const auto& c : cases) {
    const auto st = parse_transform(c.expr);
    const auto f = catalog_signal(c.signal);
    // The recovered signal agrees with the catalog one on a sample grid.
    for (double t : {-2.0, -0.5, 0.0, 0.5, 2.0}) CHECK(std::abs(sl_inverse_split(st, t) - f(t)) < 1e-12);
    for (int k = 0; k < 10; ++k) {
      const Complex s(re(rng), im(rng));
      const auto fwd = sl_forward_symmetric(f, s, 1e-9).value;
      CHECK(std::abs(fwd - st(s, std::conj(s))) <= 1e-6);
    }
  }
}

TEST_CASE("numeric inversion of the sign transform") {
  const TransformFunction F = [](const SLPoint& p) { return 1.0 / Complex(p.x1, p.y) + 1.0 / Complex(-p.x2, p.y); };
  CHECK(std::abs(sl_inverse_numeric(F, 1, 1, 0.0, 1e3, 1e-8)) <= 5e-3);
  CHECK(std::abs(sl_inverse_numeric(F, 1, 1, 1.0, 1e3, 1e-8) - 1.0) <= 1e-2);
  CHECK(std::abs(sl_inverse_numeric(F, 1, 1, -1.0, 1e3, 1e-8) + 1.0) <= 1e-2);
}

TEST_CASE("numeric inversion of one, heaviside and sign") {
  struct Case {
    TransformFunction F;
    double (*f)(double);
  };
  const Case cases[] = {
      {[](const SLPoint& p) { return 1.0 / Complex(p.x1, p.y) + 1.0 / Complex(-p.x2, p.y); },
       [](double t) { return t >= 0 ? 1.0 : -1.0; }},
      {[](const SLPoint& p) { return 1.0 / Complex(p.x1, p.y) + 1.0 / Complex(p.x2, -p.y); },
       [](double) { return 1.0; }},
      {[](const SLPoint& p) { return 1.0 / Complex(p.x1, p.y); }, [](double t) { return t >= 0 ? 1.0 : 0.0; }},
  };
  for (const auto& c : cases) {
    for (double t : {2.0, -2.0, 0.5, -0.5}) {
      const auto r = sl_inverse_numeric_report(c.F, 1, 1, t, 1e3, 1e-8);
      CHECK(std::abs(r.value - c.f(t)) <= 1e-2);
      CHECK(r.truncation_sensitivity < 2e-2);
    }
  }
  // heaviside midpoint
  CHECK(std::abs(sl_inverse_numeric(cases[2].F, 1, 1, 0.0, 1e3, 1e-8) - 0.5) <= 5e-3);
  // one at t = -2
  CHECK(std::abs(sl_inverse_numeric(cases[1].F, 1, 1, -2.0, 1e3, 1e-8) - 1.0) <= 1e-2);
}

TEST_CASE("real-s kernel witness") {
  for (double x : {0.5, 1.0, 2.0}) {
    CHECK(std::abs(sl_forward(catalog_signal("ramp"), {x, x, 0.0}, 1e-10).value) <= 1e-9);
    // but for complex s the transform is 1/s^2 - 1/conj(s)^2, nonzero
    const Complex s(x, 1.0);
    CHECK(std::abs(sl_forward_symmetric(catalog_signal("ramp"), s, 1e-10).value) > 0.01);
  }
}
