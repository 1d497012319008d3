#include <benchmark/benchmark.h>

#include "tabalg/chartab.hpp"
#include "tabalg/closed.hpp"
#include "tabalg/scheme.hpp"

using namespace tabalg;

static void BM_AffineCharacterTable(benchmark::State& state) {
  auto t = scheme::affine_plane_algebra(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chartab::character_table(t));
}
BENCHMARK(BM_AffineCharacterTable)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);

static void BM_ClosedSubsets(benchmark::State& state) {
  auto t = scheme::affine_plane_algebra(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closed::enumerate_closed_subsets(t));
}
BENCHMARK(BM_ClosedSubsets)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_SrgSweep(benchmark::State& state) {
  const long max_n = state.range(0);
  for (auto _ : state) {
    std::size_t agree = 0;
    for (long n = 1; n <= max_n; ++n)
      for (long k = 0; k <= n; ++k)
        for (long l = 0; l <= k; ++l)
          for (long m = 0; m <= k; ++m)
            if (scheme::is_admissible_srg(n, k, l, m)) agree += scheme::srg_algebra(n, k, l, m).agree;
    benchmark::DoNotOptimize(agree);
  }
}
BENCHMARK(BM_SrgSweep)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_PetersenAlgebra(benchmark::State& state) {
  auto s = scheme::srg_table(10, 3, 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(chartab::character_table(s));
}
BENCHMARK(BM_PetersenAlgebra);
BENCHMARK_MAIN();
