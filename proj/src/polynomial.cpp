#include "symlap/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "symlap/error.hpp"

namespace symlap {

namespace {

// Guard against division by a denominator that underflowed to (near) zero.
constexpr double kPoleGuard = 1e-300;

std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_coefficient(Complex c) {
  if (c.imag() == 0.0) return "(" + format_real(c.real()) + ")";
  return "(" + format_real(c.real()) + "+" + format_real(c.imag()) + "*i)";
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(Complex c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int degree) {
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  c.back() = 1.0;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::linear_factor(Complex root) { return Polynomial({-root, 1.0}); }

void Polynomial::trim() {
  double scale = 0.0;
  for (const auto& c : c_) scale = std::max(scale, std::abs(c));
  // Leading coefficients at roundoff level relative to the rest are
  // cancellation residue, not signal.
  const double floor = 1e-14 * scale;
  while (!c_.empty() && std::abs(c_.back()) <= floor) c_.pop_back();
}

Complex Polynomial::operator()(Complex z) const noexcept {
  Complex acc{};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double Polynomial::magnitude_at(Complex z) const noexcept {
  const double r = std::abs(z);
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Complex> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::taylor_shift(Complex center) const {
  // Repeated synthetic division by (z - center).
  std::vector<Complex> a = c_;
  const std::size_t n = a.size();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t j = n - 1; j > k; --j) a[j - 1] += center * a[j];
  }
  Polynomial out;
  out.c_ = std::move(a);
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(Complex k, const Polynomial& p) {
  std::vector<Complex> c = p.c_;
  for (auto& x : c) x *= k;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw PoleError("polynomial division by zero");
  std::vector<Complex> r = dividend.c_;
  const int dn = divisor.degree();
  if (dividend.degree() < dn) return {Polynomial{}, dividend};
  std::vector<Complex> q(static_cast<std::size_t>(dividend.degree() - dn + 1));
  const Complex lead = divisor.leading();
  for (int k = dividend.degree() - dn; k >= 0; --k) {
    const Complex factor = r[static_cast<std::size_t>(k + dn)] / lead;
    q[static_cast<std::size_t>(k)] = factor;
    for (int j = 0; j <= dn; ++j) {
      r[static_cast<std::size_t>(k + j)] -= factor * divisor.c_[static_cast<std::size_t>(j)];
    }
    r[static_cast<std::size_t>(k + dn)] = 0.0;
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

bool Polynomial::approx_equal(const Polynomial& other, double rel) const noexcept {
  if (degree() != other.degree()) return false;
  double scale = 0.0;
  for (std::size_t k = 0; k < c_.size(); ++k) scale = std::max({scale, std::abs(c_[k]), std::abs(other.c_[k])});
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (std::abs(c_[k] - other.c_[k]) > rel * scale) return false;
  }
  return true;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == Complex{}) continue;
    if (!out.empty()) out += " + ";
    out += format_coefficient(c_[k]);
    if (k == 1) out += "*" + var;
    if (k > 1) out += "*" + var + "^" + std::to_string(k);
  }
  return out;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw PoleError("rational function with zero denominator");
  const Complex lead = den.leading();
  num_ = (1.0 / lead) * num;
  den_ = (1.0 / lead) * den;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.approx_equal(b.den_)) return {a.num_ + b.num_, a.den_};
  // Reuse the larger denominator when it is a multiple of the smaller one, so
  // repeated sums over shared factors do not inflate pole multiplicities.
  const auto try_absorb = [](const RationalFunction& big, const RationalFunction& small)
      -> std::optional<RationalFunction> {
    if (big.den_.degree() < small.den_.degree()) return std::nullopt;
    auto [q, r] = Polynomial::divmod(big.den_, small.den_);
    double scale = 0.0;
    for (const auto& c : big.den_.coefficients()) scale = std::max(scale, std::abs(c));
    for (const auto& c : r.coefficients()) {
      if (std::abs(c) > 1e-12 * scale) return std::nullopt;
    }
    return RationalFunction{big.num_ + q * small.num_, big.den_};
  };
  if (auto r = try_absorb(a, b)) return *r;
  if (auto r = try_absorb(b, a)) return *r;
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw PoleError("division by an identically zero expression");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction operator*(Complex k, const RationalFunction& r) { return {k * r.num_, r.den_}; }

std::string RationalFunction::to_string(const std::string& var) const {
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

Complex evaluate_rational(const RationalFunction& r, Complex z) {
  const Complex d = r.den()(z);
  if (std::abs(d) < kPoleGuard) throw PoleError("evaluation at a pole of the rational function");
  return r.num()(z) / d;
}

}  // namespace symlap
