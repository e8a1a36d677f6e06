#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "symlap/error.hpp"
#include "symlap/polynomial.hpp"

namespace symlap {

namespace {

constexpr int kMaxAberthIterations = 2000;
// Approximations closer than this (relative to max(1, |r|)) are one root.
constexpr double kClusterRadius = 1e-8;
// Looser radius within which a multiplicity test may still merge clusters;
// a root of multiplicity m is only resolved to about eps^{1/m}.
constexpr double kMultipleRootRadius = 1e-3;
constexpr double kResidualTolerance = 1e-10;
constexpr double kMultiplicityTolerance = 1e-12;

double rel_scale(Complex z) { return std::max(1.0, std::abs(z)); }

std::vector<Complex> aberth(const Polynomial& p) {
  const int n = p.degree();
  const Polynomial dp = p.derivative();
  const auto coeffs = p.coefficients();

  // Start on a circle whose radius is the geometric mean of the root moduli,
  // rotated off the real axis so symmetric configurations do not stall.
  const double radius =
      std::max(1e-3, std::pow(std::abs(coeffs.front()) / std::abs(coeffs.back()), 1.0 / n));
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    z[static_cast<std::size_t>(k)] =
        std::polar(radius, 2.0 * std::numbers::pi * k / n + 0.4);
  }

  for (int iter = 0; iter < kMaxAberthIterations; ++iter) {
    double max_step = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      const Complex pv = p(z[i]);
      if (pv == Complex{}) continue;
      const Complex ratio = pv / dp(z[i]);
      Complex repulsion{};
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / rel_scale(z[i]));
    }
    if (max_step <= 1e-15) break;
  }
  return z;
}

void newton_polish(const Polynomial& p, const Polynomial& dp, Complex& z) {
  for (int k = 0; k < 4; ++k) {
    const Complex d = dp(z);
    if (d == Complex{}) return;
    const Complex next = z - p(z) / d;
    if (!(std::abs(p(next)) < std::abs(p(z)))) return;
    z = next;
  }
}

struct Cluster {
  Complex center;
  std::vector<Complex> members;
};

Complex centroid(const std::vector<Complex>& v) {
  return std::accumulate(v.begin(), v.end(), Complex{}) / static_cast<double>(v.size());
}

// A root of multiplicity m is a simple root of p^{(m-1)}; refine there and
// check that p, ..., p^{(m-2)} vanish to roundoff. Two distinct roots a
// distance d apart leave |p| ~ d^2 at their midpoint, far above roundoff.
bool confirm_multiplicity(const Polynomial& p, std::size_t m, Complex& c) {
  Polynomial d = p;
  std::vector<Polynomial> derivs{p};
  for (std::size_t k = 1; k < m; ++k) {
    d = d.derivative();
    derivs.push_back(d);
  }
  const Polynomial dd = d.derivative();
  Complex refined = c;
  for (int k = 0; k < 8; ++k) {
    const Complex slope = dd(refined);
    if (slope == Complex{}) break;
    const Complex step = d(refined) / slope;
    refined -= step;
    if (std::abs(step) <= 1e-16 * rel_scale(refined)) break;
  }
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (std::abs(derivs[k](refined)) > kMultiplicityTolerance * derivs[k].magnitude_at(refined)) return false;
  }
  c = refined;
  return true;
}

}  // namespace

std::vector<Root> polynomial_roots(const Polynomial& p) {
  if (p.degree() < 1) throw DomainError("polynomial_roots needs degree >= 1");

  // Exact zero roots first: trailing zero coefficients.
  const auto coeffs = p.coefficients();
  std::size_t zeros = 0;
  while (coeffs[zeros] == Complex{}) ++zeros;
  const Polynomial q(std::vector<Complex>(coeffs.begin() + static_cast<std::ptrdiff_t>(zeros), coeffs.end()));

  std::vector<Root> out;
  if (zeros > 0) out.push_back({Complex{}, static_cast<int>(zeros)});
  if (q.degree() < 1) return out;

  std::vector<Complex> approx = q.degree() == 1
                                    ? std::vector<Complex>{-q.coefficient(0) / q.coefficient(1)}
                                    : aberth(q);
  const Polynomial dq = q.derivative();
  for (auto& z : approx) newton_polish(q, dq, z);

  // Stage one: unconditional clustering at kClusterRadius.
  std::vector<Cluster> clusters;
  for (const auto& z : approx) {
    auto it = std::find_if(clusters.begin(), clusters.end(), [&](const Cluster& c) {
      return std::abs(c.center - z) <= kClusterRadius * rel_scale(z);
    });
    if (it == clusters.end()) {
      clusters.push_back({z, {z}});
    } else {
      it->members.push_back(z);
      it->center = centroid(it->members);
    }
  }

  // Stage two: merge nearby clusters that the derivative test confirms as
  // one multiple root.
  std::vector<bool> absorbed(clusters.size(), false);
  std::vector<Cluster> merged;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (absorbed[i]) continue;
    Cluster c = clusters[i];
    std::vector<std::size_t> partners;
    std::vector<Complex> members = c.members;
    for (std::size_t j = i + 1; j < clusters.size(); ++j) {
      if (absorbed[j]) continue;
      if (std::abs(clusters[j].center - c.center) <= kMultipleRootRadius * rel_scale(c.center)) {
        partners.push_back(j);
        members.insert(members.end(), clusters[j].members.begin(), clusters[j].members.end());
      }
    }
    Complex center = centroid(members);
    if (!partners.empty() && confirm_multiplicity(q, members.size(), center)) {
      for (auto j : partners) absorbed[j] = true;
      merged.push_back({center, std::move(members)});
      continue;
    }
    if (c.members.size() > 1) {
      Complex cc = c.center;
      if (confirm_multiplicity(q, c.members.size(), cc)) c.center = cc;
    }
    merged.push_back(std::move(c));
  }

  for (const auto& c : merged) {
    const double residual = std::abs(q(c.center));
    if (!(residual <= kResidualTolerance * q.magnitude_at(c.center))) {
      throw NumericError("root finder did not converge (residual " + std::to_string(residual) + ")");
    }
    out.push_back({c.center, static_cast<int>(c.members.size())});
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

}  // namespace symlap
