// Serial reference kernels against their OpenMP versions, plus one
// end-to-end induced representation build.

#include <benchmark/benchmark.h>

#include <random>

#include "outfn/glrep.hpp"
#include "outfn/kernels.hpp"

namespace {

using outfn::RationalMatrix;

RationalMatrix random_matrix(int rows, int cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

template <RationalMatrix (*Multiply)(const RationalMatrix&, const RationalMatrix&)>
void bm_multiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RationalMatrix a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Multiply(a, b));
  state.SetComplexityN(n);
}

template <outfn::kernels::Echelon (*Echelon)(const RationalMatrix&)>
void bm_echelon(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RationalMatrix a = random_matrix(n, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(Echelon(a));
  state.SetComplexityN(n);
}

void bm_induce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const outfn::InducedRep rep(n, n == 3 ? outfn::Mu::symmetric : outfn::Mu::exterior);
    benchmark::DoNotOptimize(rep.generator_matrices());
  }
}

}  // namespace

BENCHMARK(bm_multiply<outfn::kernels::serial::multiply>)->Name("multiply/serial")->RangeMultiplier(2)->Range(16, 128);
BENCHMARK(bm_multiply<outfn::kernels::parallel::multiply>)->Name("multiply/parallel")->RangeMultiplier(2)->Range(16, 128);
BENCHMARK(bm_echelon<outfn::kernels::serial::echelon>)->Name("echelon/serial")->RangeMultiplier(2)->Range(16, 64);
BENCHMARK(bm_echelon<outfn::kernels::parallel::echelon>)->Name("echelon/parallel")->RangeMultiplier(2)->Range(16, 64);
BENCHMARK(bm_induce)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
