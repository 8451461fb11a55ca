#include <benchmark/benchmark.h>

#include "homalg/sphere_models.hpp"

using namespace homalg;

namespace {

void BM_EndTrivial(benchmark::State& state) {
  SphereModel m = build_An(2);
  ModelResolution r = resolution_trivial(m);
  for (auto _ : state) benchmark::DoNotOptimize(end_algebra(r));
}
BENCHMARK(BM_EndTrivial);

void BM_EndNPoints(benchmark::State& state) {
  SphereModel m = build_An(static_cast<int>(state.range(0)));
  ModelResolution r = resolution_n_points(m);
  for (auto _ : state) benchmark::DoNotOptimize(end_algebra(r));
}
BENCHMARK(BM_EndNPoints)->Arg(2)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_FormalityChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  DgAlgebraPtr e = end_algebra(resolution_n_points(build_An(n)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_formality_chain(formality_chain_n_points(e, n).chain));
}
BENCHMARK(BM_FormalityChain)->Arg(2)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
