// Serial reference vs OpenMP engine on exact enumeration and branch and bound.

#include <benchmark/benchmark.h>

#include "shadowlab/explore.hpp"

using namespace shadowlab;

namespace {

const char* kFamilies[] = {"empty", "T:3", "K:3:4", "D"};

SearchConfig config(int threads, bool iso) {
  SearchConfig c;
  c.threads = threads;
  c.iso_reduction = iso;
  return c;
}

void BM_EnumerateSerial(benchmark::State& st) {
  const auto f = ForbiddenFamily::parse(kFamilies[st.range(0)]);
  const int n = static_cast<int>(st.range(1));
  std::uint64_t visited = 0;
  for (auto _ : st) visited = enumerate_free_serial(n, 3, f, config(1, st.range(2))).stats.visited;
  st.counters["visited"] = static_cast<double>(visited);
  st.SetLabel(f.to_string());
}

void BM_EnumerateParallel(benchmark::State& st) {
  const auto f = ForbiddenFamily::parse(kFamilies[st.range(0)]);
  const int n = static_cast<int>(st.range(1));
  const int threads = static_cast<int>(st.range(3));
  std::uint64_t visited = 0;
  for (auto _ : st) visited = enumerate_free(n, 3, f, config(threads, st.range(2))).stats.visited;
  st.counters["visited"] = static_cast<double>(visited);
  st.SetLabel(f.to_string() + " threads=" + std::to_string(threads));
}

void BM_BranchBoundSerial(benchmark::State& st) {
  const auto f = ForbiddenFamily::parse(kFamilies[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(max_edges_given_shadow_serial(7, 3, f, st.range(1), config(1, false)));
  st.SetLabel(f.to_string());
}

void BM_BranchBoundParallel(benchmark::State& st) {
  const auto f = ForbiddenFamily::parse(kFamilies[st.range(0)]);
  const int threads = static_cast<int>(st.range(2));
  for (auto _ : st) benchmark::DoNotOptimize(max_edges_given_shadow(7, 3, f, st.range(1), config(threads, false)));
  st.SetLabel(f.to_string() + " threads=" + std::to_string(threads));
}

}  // namespace

// args: family index, n, iso[, threads]
BENCHMARK(BM_EnumerateSerial)->Args({1, 6, 0})->Args({3, 6, 0})->Args({1, 7, 1})->Args({3, 7, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)
    ->Args({1, 6, 0, 1})->Args({1, 6, 0, 4})
    ->Args({3, 6, 0, 1})->Args({3, 6, 0, 4})
    ->Args({1, 7, 1, 1})->Args({1, 7, 1, 4})
    ->Args({3, 7, 1, 1})->Args({3, 7, 1, 4})
    ->Unit(benchmark::kMillisecond);
// args: family index, shadow size[, threads]
BENCHMARK(BM_BranchBoundSerial)->Args({1, 18})->Args({2, 21})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BranchBoundParallel)->Args({1, 18, 1})->Args({1, 18, 4})->Args({2, 21, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
