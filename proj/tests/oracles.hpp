#pragma once

// Independent reference computations used only by the tests.

#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

using Complex = std::complex<double>;

/// Composite Simpson rule with n (even) intervals.
inline Complex simpson(const std::function<Complex(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  Complex acc = f(a) + f(b);
  for (int k = 1; k < n; ++k) acc += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
  return acc * h / 3.0;
}

}  // namespace oracle
