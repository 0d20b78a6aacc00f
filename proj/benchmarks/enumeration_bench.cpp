#include <benchmark/benchmark.h>

#include "pavstat/permutation.hpp"
#include "pavstat/statpoly.hpp"

namespace {

void BM_CountAvoiders(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pavstat::count_avoiders_321(n));
}
BENCHMARK(BM_CountAvoiders)->DenseRange(10, 14)->Unit(benchmark::kMillisecond);

// Full traversal with statistics, bypassing the polynomial memo.
void BM_StatsTraversal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long total = 0;
    pavstat::for_each_avoider(n, [&](std::span<const int>, const pavstat::WordStats& s) {
      total += s.maj + s.inv + s.des + s.lrm;
    });
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_StatsTraversal)->DenseRange(10, 14)->Unit(benchmark::kMillisecond);

void BM_InvTransfer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pavstat::inv_poly_transfer(n));
}
BENCHMARK(BM_InvTransfer)->Arg(13)->Arg(17)->Arg(21)->Unit(benchmark::kMillisecond);

}  // namespace
