#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symlap/core.hpp"

namespace symlap {

/// Complex-coefficient polynomial, coefficients in ascending degree. The
/// highest stored coefficient is nonzero unless the polynomial is zero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coefficients);

  static Polynomial constant(Complex c);
  /// z^degree
  static Polynomial monomial(int degree);
  /// Monic linear factor (z - root).
  static Polynomial linear_factor(Complex root);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  std::span<const Complex> coefficients() const noexcept { return c_; }
  Complex coefficient(int k) const noexcept {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : Complex{};
  }
  Complex leading() const noexcept { return c_.empty() ? Complex{} : c_.back(); }

  /// Horner evaluation.
  Complex operator()(Complex z) const noexcept;
  /// sum |c_k| |z|^k, the natural scale for residual checks at z.
  double magnitude_at(Complex z) const noexcept;

  Polynomial derivative() const;
  /// Coefficients of h -> p(center + h).
  Polynomial taylor_shift(Complex center) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Complex k, const Polynomial& p);
  Polynomial operator-() const;

  /// Euclidean division; throws PoleError when `divisor` is zero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);

  /// Coefficientwise agreement relative to the larger coefficient magnitude.
  bool approx_equal(const Polynomial& other, double rel = 1e-13) const noexcept;

  /// Human-readable form in `var`, parseable by parse_transform.
  std::string to_string(const std::string& var) const;

 private:
  void trim();
  std::vector<Complex> c_;
};

/// num / den with den monic and nonzero.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(1.0)) {}
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction constant(Complex c) { return {Polynomial::constant(c), Polynomial::constant(1.0)}; }

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  /// True when the function does not depend on its argument in stored form.
  bool is_constant() const noexcept { return den_.is_constant() && num_.is_constant(); }
  Complex constant_value() const noexcept { return num_.coefficient(0); }
  bool is_proper() const noexcept { return num_.degree() < den_.degree(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(Complex k, const RationalFunction& r);
  RationalFunction operator-() const { return {-num_, den_}; }

  std::string to_string(const std::string& var) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// num(z) / den(z); throws PoleError when |den(z)| is below the underflow guard.
Complex evaluate_rational(const RationalFunction& r, Complex z);

struct Root {
  Complex value;
  int multiplicity = 1;
};

/// All complex roots of `p` (degree >= 1) with multiplicities summing to the
/// degree. Aberth-Ehrlich simultaneous iteration, Newton polishing, then
/// clustering of coincident approximations. Throws NumericError if the
/// iteration fails to produce roots with small residual.
std::vector<Root> polynomial_roots(const Polynomial& p);

}  // namespace symlap
