#include "hankelscope/delta_spectra.hpp"

#include <benchmark/benchmark.h>

namespace hs = hankelscope;

namespace {

void BM_DeltaPrimeSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hs::DeltaKernel k({0.0, 1.0}, 1.0);
  for (auto _ : state) {
    auto s = hs::delta_spectrum(k, n, 10);
    benchmark::DoNotOptimize(s.positive.data());
  }
}
BENCHMARK(BM_DeltaPrimeSpectrum)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

void BM_DeltaSecondSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hs::DeltaKernel k({0.0, 0.0, 1.0}, 1.0);
  for (auto _ : state) {
    auto s = hs::delta_spectrum(k, n, 10);
    benchmark::DoNotOptimize(s.positive.data());
  }
}
BENCHMARK(BM_DeltaSecondSpectrum)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

void BM_SquareRoute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hs::DeltaKernel k({0.0, 1.0}, 1.0);
  for (auto _ : state) {
    auto mu = hs::square_route_spectrum(k, n);
    benchmark::DoNotOptimize(mu.data());
  }
}
BENCHMARK(BM_SquareRoute)->RangeMultiplier(2)->Range(64, 256)->Unit(benchmark::kMillisecond);

}  // namespace
