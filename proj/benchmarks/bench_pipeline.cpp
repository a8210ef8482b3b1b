#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "petal/coloring.hpp"
#include "petal/exactdet.hpp"
#include "petal/gausscode.hpp"
#include "petal/permutation.hpp"

namespace {

petal::PetalPermutation identity(int p) {
  std::vector<int> h(static_cast<std::size_t>(p));
  std::iota(h.begin(), h.end(), 1);
  return petal::PetalPermutation(std::move(h));
}

void BM_UnsignedCode(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(petal::unsigned_gauss_code(p));
}
BENCHMARK(BM_UnsignedCode)->Arg(9)->Arg(25)->Arg(51);

void BM_SignCode(benchmark::State& state) {
  const auto perm = petal::random_permutation(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(petal::sign_gauss_code(perm));
}
BENCHMARK(BM_SignCode)->Arg(9)->Arg(25)->Arg(51);

void BM_BuildMatrix(benchmark::State& state) {
  const auto code = petal::sign_gauss_code(petal::random_permutation(static_cast<int>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(petal::build_coloring_matrix(code));
}
BENCHMARK(BM_BuildMatrix)->Arg(9)->Arg(25)->Arg(51);

void BM_KnotDeterminantIdentity(benchmark::State& state) {
  const auto perm = identity(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(petal::knot_determinant(perm));
}
BENCHMARK(BM_KnotDeterminantIdentity)->Arg(11)->Arg(25)->Arg(51)->Unit(benchmark::kMillisecond);

void BM_KnotDeterminantRandom(benchmark::State& state) {
  std::uint64_t seed = 0;
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    state.PauseTiming();
    const auto perm = petal::random_permutation(p, petal::derive_seed(7, seed++));
    state.ResumeTiming();
    benchmark::DoNotOptimize(petal::knot_determinant(perm));
  }
}
BENCHMARK(BM_KnotDeterminantRandom)->Arg(11)->Arg(25)->Arg(51)->Unit(benchmark::kMillisecond);

void BM_DetBareiss(benchmark::State& state) {
  const auto minor = petal::first_minor(
      petal::build_coloring_matrix(petal::sign_gauss_code(identity(static_cast<int>(state.range(0))))));
  for (auto _ : state) benchmark::DoNotOptimize(petal::det_bareiss(minor));
}
BENCHMARK(BM_DetBareiss)->Arg(11)->Arg(17)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_DetCrt(benchmark::State& state) {
  const auto minor = petal::first_minor(
      petal::build_coloring_matrix(petal::sign_gauss_code(identity(static_cast<int>(state.range(0))))));
  for (auto _ : state) benchmark::DoNotOptimize(petal::det_crt(minor));
}
BENCHMARK(BM_DetCrt)->Arg(11)->Arg(17)->Arg(25)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
