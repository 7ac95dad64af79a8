#include <benchmark/benchmark.h>

#include <omp.h>

#include "posetkit/extremal.hpp"
#include "posetkit/kernels.hpp"
#include "posetkit/poset.hpp"

using namespace posetkit;

namespace {

std::vector<Bitset> sparse_dag(std::size_t n) {
  std::vector<Bitset> rows(n, Bitset(n));
  std::uint64_t state = 88172645463325252ULL;
  for (std::size_t i = 0; i < n; ++i) {
    for (int e = 0; e < 3; ++e) {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      const std::size_t j = i + 1 + state % 16;
      if (j < n) rows[i].set(j);
    }
  }
  return rows;
}

void BM_ClosureSerial(benchmark::State& state) {
  const auto base = sparse_dag(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto rows = base;
    kernels::transitive_closure_serial(rows);
    benchmark::DoNotOptimize(rows);
  }
}

void BM_ClosureParallel(benchmark::State& state) {
  const auto base = sparse_dag(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto rows = base;
    kernels::transitive_closure_parallel(rows);
    benchmark::DoNotOptimize(rows);
  }
  state.counters["threads"] = omp_get_max_threads();
}

void BM_ExtremalReference(benchmark::State& state) {
  const Poset p = boolean_lattice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ex_star_max_dim_reference(p, 2).value);
}

void BM_ExtremalSerial(benchmark::State& state) {
  const Poset p = boolean_lattice(static_cast<std::size_t>(state.range(0)));
  ExtremalOptions options;
  options.parallel = false;
  for (auto _ : state) benchmark::DoNotOptimize(ex_star_max_dim(p, 2, options).value);
}

void BM_ExtremalParallel(benchmark::State& state) {
  const Poset p = boolean_lattice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ex_star_max_dim(p, 2).value);
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_ClosureSerial)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureParallel)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtremalReference)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtremalSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtremalParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
