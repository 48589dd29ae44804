// Serial reference against the OpenMP kernel for each parallel operation.
// Arguments: the size, then the thread count for the parallel variants.

#include <benchmark/benchmark.h>

#include "pancake/oracle.hpp"
#include "pancake/patterns.hpp"
#include "pancake/search.hpp"

using namespace pancake;

namespace {

void BM_GodTableSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(god_table_serial(static_cast<int>(st.range(0))));
}

void BM_GodTableParallel(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(god_table(static_cast<int>(st.range(0)), static_cast<int>(st.range(1))));
}

void BM_TableSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(table_serial(static_cast<int>(st.range(0)), true));
}

void BM_TableParallel(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(
        table(static_cast<int>(st.range(0)), TableOptions{true, static_cast<int>(st.range(1))}));
}

SearchConfig search_config(int which, int jobs) {
  SearchConfig cfg;
  cfg.jobs = jobs;
  switch (which) {
    case 0:
      cfg.n = 23;
      cfg.mode = SearchMode::PalindromicOdd;
      break;
    case 1:
      cfg.n = 31;
      cfg.mode = SearchMode::Triple;
      break;
    default:
      cfg.n = 19;
      cfg.mode = SearchMode::Patchwork;
      break;
  }
  return cfg;
}

const char* kSearchNames[] = {"palin(23)", "triple(31)", "patchwork(19)"};

void BM_SearchSerial(benchmark::State& st) {
  const SearchConfig cfg = search_config(static_cast<int>(st.range(0)), 1);
  st.SetLabel(kSearchNames[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(search_serial(cfg));
}

void BM_SearchParallel(benchmark::State& st) {
  const SearchConfig cfg = search_config(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  st.SetLabel(kSearchNames[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(search(cfg));
}

}  // namespace

BENCHMARK(BM_GodTableSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GodTableParallel)->ArgsProduct({{6, 7}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TableSerial)->Arg(199)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->ArgsProduct({{199, 1000}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SearchSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->ArgsProduct({{0, 1, 2}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
