#include <benchmark/benchmark.h>

#include "elimtree/analysis.hpp"
#include "elimtree/families.hpp"
#include "elimtree/generate.hpp"
#include "elimtree/history_free.hpp"
#include "elimtree/loopless.hpp"

using namespace elimtree;

namespace {

// Steps of an endless walk: the generator restarts whenever it finishes.
template <class Generator>
void walk(benchmark::State& state, const PeoGraph& pg) {
  auto gen = std::make_unique<Generator>(pg);
  for (auto _ : state) {
    if (!gen->next()) gen = std::make_unique<Generator>(pg);
    benchmark::DoNotOptimize(gen->current().parents().data());
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_LooplessRandomTree(benchmark::State& state) {
  const PeoGraph pg(random_tree(static_cast<int>(state.range(0)), 7));
  walk<LooplessTreeGenerator>(state, pg);
}
BENCHMARK(BM_LooplessRandomTree)->Arg(10)->Arg(100)->Arg(1000);

void BM_HistoryFreeRandomTree(benchmark::State& state) {
  const PeoGraph pg(random_tree(static_cast<int>(state.range(0)), 7));
  walk<HistoryFreeGenerator>(state, pg);
}
BENCHMARK(BM_HistoryFreeRandomTree)->Arg(10)->Arg(100)->Arg(1000);

void BM_HistoryFreeComplete(benchmark::State& state) {
  const PeoGraph pg(complete_graph(static_cast<int>(state.range(0))));
  walk<HistoryFreeGenerator>(state, pg);
}
BENCHMARK(BM_HistoryFreeComplete)->Arg(6)->Arg(9)->Arg(12);

void BM_HistoryFreeStar(benchmark::State& state) {
  const PeoGraph pg(star_graph(static_cast<int>(state.range(0))));
  walk<HistoryFreeGenerator>(state, pg);
}
BENCHMARK(BM_HistoryFreeStar)->Arg(6)->Arg(9)->Arg(12);

void BM_HistoryFreeRandomChordal(benchmark::State& state) {
  const PeoGraph pg(random_chordal(static_cast<int>(state.range(0)), 3, 7));
  walk<HistoryFreeGenerator>(state, pg);
}
BENCHMARK(BM_HistoryFreeRandomChordal)->Arg(20)->Arg(200);

void BM_CountForests(benchmark::State& state) {
  const Graph g = random_chordal(static_cast<int>(state.range(0)), 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(count_forests(g));
}
BENCHMARK(BM_CountForests)->Arg(16)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
