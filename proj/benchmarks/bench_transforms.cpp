#include "hankelscope/transforms.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

namespace hs = hankelscope;

namespace {

void BM_Mellin(benchmark::State& state) {
  const hs::LogGrid grid(12.0, static_cast<int>(state.range(0)));
  const auto u = hs::u_map([](double t) { return std::exp(-t); }, grid);
  for (auto _ : state) {
    auto w = hs::mellin(u);
    benchmark::DoNotOptimize(w.values.data());
  }
}
BENCHMARK(BM_Mellin)->RangeMultiplier(4)->Range(256, 65536);

void BM_FTransform(benchmark::State& state) {
  const hs::LogGrid grid(12.0, static_cast<int>(state.range(0)));
  const hs::RealFunction f = [](double t) { return std::exp(-t); };
  for (auto _ : state) {
    auto w = hs::f_transform(f, grid);
    benchmark::DoNotOptimize(w.values.data());
  }
}
BENCHMARK(BM_FTransform)->RangeMultiplier(4)->Range(256, 65536);

void BM_WeightEval(benchmark::State& state) {
  double xi = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hs::v_eval(xi));
    xi += 1e-3;
    if (xi > 20.0) xi = -20.0;
  }
}
BENCHMARK(BM_WeightEval);

}  // namespace
