#include "hankelscope/discretization.hpp"

#include <benchmark/benchmark.h>

namespace hs = hankelscope;

namespace {

const hs::QuasiCarlemanKernel& carleman() {
  static const hs::QuasiCarlemanKernel k(hs::RealPolynomial({1.0}));
  return k;
}

void BM_HankelAssembly(benchmark::State& state) {
  const hs::LogGrid grid(10.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto op = hs::build_hankel_matrix(carleman(), grid);
    benchmark::DoNotOptimize(op.matrix.data());
  }
}
BENCHMARK(BM_HankelAssembly)->RangeMultiplier(2)->Range(128, 2048)->Unit(benchmark::kMillisecond);

void BM_HankelEigen(benchmark::State& state) {
  const hs::LogGrid grid(10.0, static_cast<int>(state.range(0)));
  const auto op = hs::build_hankel_matrix(carleman(), grid);
  hs::EigenOptions opts;
  opts.compute_residuals = false;
  for (auto _ : state) {
    auto rep = hs::eigen_sym(op, opts);
    benchmark::DoNotOptimize(rep.eigenvalues.data());
  }
}
BENCHMARK(BM_HankelEigen)->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMillisecond);

void BM_ASideAssembly(benchmark::State& state) {
  const hs::LogGrid grid(10.0, static_cast<int>(state.range(0)));
  const auto q = hs::p_to_q(hs::RealPolynomial({1.5, 0.0, 1.0}));
  for (auto _ : state) {
    auto op = hs::build_a_matrix(q, grid);
    benchmark::DoNotOptimize(op.matrix.data());
  }
}
BENCHMARK(BM_ASideAssembly)->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMillisecond);

}  // namespace
