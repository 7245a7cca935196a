#include <benchmark/benchmark.h>

#include "iwasawa/sweep.hpp"

using iwasawa::Execution;

namespace {

const std::vector<std::uint64_t> kPrimes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

template <Execution E>
void BM_StarTable(benchmark::State& state) {
  const auto max_m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iwasawa::star_table(max_m, kPrimes, E));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(max_m * kPrimes.size()));
  state.counters["threads"] = E == Execution::Parallel ? iwasawa::sweep_threads() : 1;
}

template <Execution E>
void BM_FixedSpaceSweep(benchmark::State& state) {
  const auto max_order = static_cast<std::uint64_t>(state.range(0));
  std::size_t pairs = 0;
  for (auto _ : state) {
    const auto records = iwasawa::fixed_space_sweep(max_order, E);
    pairs = records.size();
    benchmark::DoNotOptimize(records.data());
  }
  state.counters["pairs"] = static_cast<double>(pairs);
  state.counters["threads"] = E == Execution::Parallel ? iwasawa::sweep_threads() : 1;
}

}  // namespace

BENCHMARK(BM_StarTable<Execution::Serial>)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StarTable<Execution::Parallel>)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FixedSpaceSweep<Execution::Serial>)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FixedSpaceSweep<Execution::Parallel>)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
