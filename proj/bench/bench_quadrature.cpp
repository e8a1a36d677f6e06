// Panel kernel (OpenMP) vs. the serial recursive reference.

#include <benchmark/benchmark.h>

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "symlap/core.hpp"
#include "symlap/quadrature.hpp"

namespace {

using symlap::Complex;

// The integrand of an inversion at t = 2 and A = 1000.
Complex inversion_integrand(double y) {
  const Complex F = 1.0 / Complex(1.0, y) + 1.0 / Complex(-1.0, y);
  return F * std::polar(1.0, 2.0 * y);
}

void BM_PanelKernel(benchmark::State& state) {
#ifdef _OPENMP
  omp_set_num_threads(static_cast<int>(state.range(0)));
#endif
  for (auto _ : state) {
    auto r = symlap::quadrature::integrate_interval(inversion_integrand, -1000.0, 1000.0, 1e-8, 0.25);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_PanelKernel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SerialReference(benchmark::State& state) {
  for (auto _ : state) {
    auto r = symlap::quadrature::serial::integrate_interval(inversion_integrand, -1000.0, 1000.0, 1e-8, 0.25);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SerialReference)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
