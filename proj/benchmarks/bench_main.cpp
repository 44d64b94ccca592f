#include <benchmark/benchmark.h>

#include "amalgam/fft.hpp"
#include "amalgam/generators.hpp"
#include "amalgam/norms.hpp"
#include "amalgam/oracle.hpp"
#include "amalgam/regions.hpp"

using namespace amalgam;

namespace {

GridSpec grid_of(int n) {
  GridSpec g;
  g.n = n;
  g.period = Rational(16);
  return g;
}

void BM_Decide(benchmark::State& state) {
  const EmbeddingQuery q{SpaceSpec::parse("B[p=1,q=2,s=1/2]"), SpaceSpec::parse("W[p=1,q=1]"), Dimension(2), {}};
  for (auto _ : state) benchmark::DoNotOptimize(decide(q));
}
BENCHMARK(BM_Decide);

void BM_RegionScan(benchmark::State& state) {
  ScanParams params;
  params.fix = {{"r", "p"}, {"s", "0"}};
  for (auto _ : state)
    benchmark::DoNotOptimize(scan_theorem_region("sobolev-to-wiener", params, Rational(1, 32)));
}
BENCHMARK(BM_RegionScan)->Unit(benchmark::kMillisecond);

void BM_ForwardTransform(benchmark::State& state) {
  const auto f = gaussian(grid_of(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(forward_transform(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ForwardTransform)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity(benchmark::oNLogN);

void BM_UniformBank(benchmark::State& state) {
  const auto g = grid_of(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_uniform_bank(g));
}
BENCHMARK(BM_UniformBank)->Arg(4096)->Arg(16384)->Unit(benchmark::kMillisecond);

void BM_WienerNorm(benchmark::State& state) {
  const auto g = grid_of(static_cast<int>(state.range(0)));
  const auto f = random_band_limited(g, 20.0, 1);
  const auto space = SpaceSpec::parse("W[p=1,q=1/2,s=1]");
  NormContext ctx;
  (void)space_norm(space, f, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(space_norm(space, f, ctx));
}
BENCHMARK(BM_WienerNorm)->Arg(4096)->Arg(16384)->Unit(benchmark::kMillisecond);

void BM_ModulationNorm(benchmark::State& state) {
  const auto g = grid_of(4096);
  const auto f = random_band_limited(g, 20.0, 1);
  const auto space = SpaceSpec::parse("M[p=2,q=1]");
  NormContext ctx;
  (void)space_norm(space, f, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(space_norm(space, f, ctx));
}
BENCHMARK(BM_ModulationNorm)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
