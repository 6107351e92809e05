#include <benchmark/benchmark.h>

#include "gammacrit/bitgraph.hpp"
#include "gammacrit/criticality.hpp"
#include "gammacrit/domination.hpp"
#include "gammacrit/families.hpp"
#include "gammacrit/treegen.hpp"

using namespace gammacrit;

static void BM_DominationNumberCycle(benchmark::State& state) {
  const BitGraph g(make_cycle(static_cast<std::size_t>(state.range(0))).graph);
  for (auto _ : state) benchmark::DoNotOptimize(min_dominating_size(g));
}
BENCHMARK(BM_DominationNumberCycle)->Arg(16)->Arg(32)->Arg(48)->Arg(64);

static void BM_DominationNumberTreeDp(benchmark::State& state) {
  const Graph t = make_path(static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(domination_number_tree(t));
}
BENCHMARK(BM_DominationNumberTreeDp)->Arg(64)->Arg(1024);

static void BM_AllGammaSets(benchmark::State& state) {
  const Graph g = make_a_k(static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(all_gamma_sets(g));
}
BENCHMARK(BM_AllGammaSets)->Arg(0)->Arg(3);

static void BM_CriticalityAk(benchmark::State& state) {
  const Graph g = make_a_k(static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(criticality_index(g));
}
BENCHMARK(BM_CriticalityAk)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_CriticalityStrategies(benchmark::State& state) {
  const Graph g = make_g_k(3).graph;
  CriticalityOptions opts;
  opts.strategy = state.range(0) == 0 ? SearchStrategy::LevelwiseBitmask : SearchStrategy::SafeSetDfs;
  for (auto _ : state) benchmark::DoNotOptimize(criticality_index(g, opts));
}
BENCHMARK(BM_CriticalityStrategies)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_TreeSweepCriticality(benchmark::State& state) {
  const auto trees = enumerate_trees(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const Graph& t : trees) benchmark::DoNotOptimize(criticality_index(t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(trees.size()));
}
BENCHMARK(BM_TreeSweepCriticality)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_EnumerateTrees(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(n));
}
BENCHMARK(BM_EnumerateTrees)->Arg(7)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_EnumerateTreesPrufer(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees_prufer(n));
}
BENCHMARK(BM_EnumerateTreesPrufer)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_FamilyFClosure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(family_f_enumerate(n));
}
BENCHMARK(BM_FamilyFClosure)->Arg(10)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
