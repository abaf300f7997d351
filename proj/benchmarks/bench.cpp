#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "chroma/constructive.hpp"
#include "chroma/function_family.hpp"
#include "chroma/shift_coloring.hpp"
#include "chroma/solver.hpp"
#include "chroma/thread.hpp"

namespace {

chroma::FiniteGraph random_graph(unsigned seed, int n, double p) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return chroma::FiniteGraph(n, edges);
}

void BM_ChromaticNumber(benchmark::State& state) {
  const auto g = random_graph(7, static_cast<int>(state.range(0)), 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chroma::chromatic_number(g).chi);
  }
}
BENCHMARK(BM_ChromaticNumber)->Arg(10)->Arg(14)->Arg(18);

void BM_PaletteColor(benchmark::State& state) {
  const auto g = random_graph(11, static_cast<int>(state.range(0)), 0.4);
  const auto co = chroma::component_order(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chroma::palette_color(g, co).colours.size());
  }
}
BENCHMARK(BM_PaletteColor)->Arg(8)->Arg(12);

void BM_Shift3Sweep(benchmark::State& state) {
  const int alphabet = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chroma::shift3_sweep(alphabet, 3, 3).pairs);
  }
}
BENCHMARK(BM_Shift3Sweep)->Arg(3)->Arg(4);

void BM_LevelGraph(benchmark::State& state) {
  const auto t = chroma::canonical_thread(13);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chroma::level_graph(t, k).graph.edge_count());
  }
}
BENCHMARK(BM_LevelGraph)->Arg(8)->Arg(10)->Arg(12);

void BM_CoveringFamily(benchmark::State& state) {
  const auto g = random_graph(13, static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chroma::covering_family(g).function_count());
  }
}
BENCHMARK(BM_CoveringFamily)->Arg(32)->Arg(64);

void BM_MisPeel(benchmark::State& state) {
  const auto g = random_graph(17, static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chroma::mis_peel_color(g).distinct());
  }
}
BENCHMARK(BM_MisPeel)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
