#include <benchmark/benchmark.h>

#include <random>

#include "fracspec/spectral.hpp"

using namespace fracspec;

namespace {

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

void BM_SpectralRadius(benchmark::State& state) {
  const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g).value);
}
BENCHMARK(BM_SpectralRadius)->Arg(8)->Arg(32)->Arg(128)->Arg(512);

// Bipartite graphs are the slow case for unshifted power iteration.
void BM_SpectralRadiusPath(benchmark::State& state) {
  const Graph g = path(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g).value);
}
BENCHMARK(BM_SpectralRadiusPath)->Arg(16)->Arg(64);

void BM_ExactCharPoly(benchmark::State& state) {
  const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(exact_char_poly(g));
}
BENCHMARK(BM_ExactCharPoly)->Arg(8)->Arg(16);

}  // namespace
