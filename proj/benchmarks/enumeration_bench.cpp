#include <benchmark/benchmark.h>

#include "fracspec/verify.hpp"

using namespace fracspec;

namespace {

void BM_EnumerateConnected(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    enumerate_graphs(n, true, [&](std::uint64_t, const Graph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateConnected)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_VerifyConnectedFractional(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(Theorem::t32, n).ok());
}
BENCHMARK(BM_VerifyConnectedFractional)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
