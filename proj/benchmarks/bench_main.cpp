#include <benchmark/benchmark.h>

#include <random>

#include "rigx/dims.hpp"
#include "rigx/gfmat.hpp"
#include "rigx/rigidity.hpp"

using namespace rigx;

namespace {

FieldMatrix random_matrix(unsigned p, std::size_t m, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FieldMatrix out(p, m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, long(rng() % p));
  return out;
}

void BM_Rref(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  const auto m = random_matrix(2, n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(32)->Arg(128);

void BM_EnumerateSubspaces(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    enumerate_subspaces(n, n / 2, 2, [&](const SubspaceBasis&) { return ++count > 0; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateSubspaces)->Arg(4)->Arg(6)->Arg(8);

void BM_InnerDimension(benchmark::State& state) {
  const auto m = random_matrix(2, std::size_t(state.range(0)), 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(inner_dimension(m, 1));
}
BENCHMARK(BM_InnerDimension)->Arg(4)->Arg(6)->Arg(8);

void BM_OuterDimension(benchmark::State& state) {
  const auto rows = std::size_t(state.range(0));
  const auto m = random_matrix(2, rows, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(outer_dimension(m, 1, rows));
}
BENCHMARK(BM_OuterDimension)->Arg(4)->Arg(5)->Arg(6);

void BM_RowRigidity(benchmark::State& state) {
  const auto m = random_matrix(2, 16, std::size_t(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(row_rigidity_threshold(m, 3));
}
BENCHMARK(BM_RowRigidity)->Arg(4)->Arg(6)->Arg(8);

}  // namespace
BENCHMARK_MAIN();
