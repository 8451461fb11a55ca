#include <benchmark/benchmark.h>

#include <random>

#include "homalg/lattice.hpp"
#include "homalg/smith.hpp"

using namespace homalg;

namespace {

Matrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-10, 10);
  Matrix m(Ring::integers, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

void BM_SmithWithTransforms(benchmark::State& state) {
  Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithWithTransforms)->Arg(5)->Arg(10)->Arg(20)->Arg(40);

void BM_InvariantFactors(benchmark::State& state) {
  Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(m));
}
BENCHMARK(BM_InvariantFactors)->Arg(5)->Arg(10)->Arg(20)->Arg(40);

void BM_KernelBasis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_matrix(n, 3);
  for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) + m(1, j);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_KernelBasis)->Arg(10)->Arg(20)->Arg(40);

}  // namespace
