#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace symlap {

/// Base of every error raised by the library. Each subclass maps onto one CLI
/// exit code (see tools/symlap.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown signal name or malformed request.
class CatalogError : public Error {
 public:
  using Error::Error;
};

/// Evaluation point lies outside the region of convergence.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature exhausted its evaluation budget.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, std::complex<double> best_estimate, double error_estimate)
      : Error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  std::complex<double> best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  std::complex<double> best_estimate_;
  double error_estimate_;
};

/// Expression text does not conform to the grammar.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A term depends on both s and conj(s) and cannot be split.
class SplitError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Rational function is not strictly proper.
class PropernessError : public Error {
 public:
  using Error::Error;
};

/// Generic numerical failure (poles, root finder, overflow, domain).
class NumericError : public Error {
 public:
  using Error::Error;
};

class PoleError : public NumericError {
 public:
  using NumericError::NumericError;
};

class DomainError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace symlap
