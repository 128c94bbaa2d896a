#include <benchmark/benchmark.h>

#include "shiftlab/algebraic.hpp"
#include "shiftlab/combinatorial.hpp"
#include "shiftlab/corpus.hpp"

using namespace shiftlab;

namespace {

void BM_RankExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ExactMatrix m = sample_generic_matrix(static_cast<int>(n), GenericConfig{}, 0);
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(m));
}
BENCHMARK(BM_RankExact)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_ExteriorProfileKab(benchmark::State& state) {
  const Graph g = complete_bipartite(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exterior_profile(g));
}
BENCHMARK(BM_ExteriorProfileKab)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SymmetricProfileKab(benchmark::State& state) {
  const Graph g = complete_bipartite(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_profile(g));
}
BENCHMARK(BM_SymmetricProfileKab)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

std::vector<Graph> chordal(int n) {
  CorpusSpec spec;
  spec.model = CorpusModel::chordal;
  spec.n = n;
  spec.count = 16;
  spec.p = 0.5;
  return gen_corpus(spec);
}

void BM_Enumerate(benchmark::State& state) {
  const auto graphs = chordal(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const Graph& g : graphs) benchmark::DoNotOptimize(enumerate_combinatorial_shifted_graphs(g));
}
BENCHMARK(BM_Enumerate)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

void BM_ChordalAlgorithm(benchmark::State& state) {
  const auto graphs = chordal(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const Graph& g : graphs) benchmark::DoNotOptimize(chordal_shift_algorithm(g));
}
BENCHMARK(BM_ChordalAlgorithm)->Arg(9)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
