#include <benchmark/benchmark.h>

#include <set>

#include "colnum/dtf.hpp"
#include "colnum/flat.hpp"
#include "colnum/greedy_orders.hpp"
#include "colnum/local_search.hpp"
#include "colnum/reach.hpp"
#include "colnum/simple_orders.hpp"
#include "colnum/uqw.hpp"
#include "colnum/util.hpp"

namespace {

using namespace colnum;

// Random spanning tree plus extra edges, same density regime as the corpus.
Graph make_graph(int n, int m, std::uint64_t seed) {
  Rng rng(seed);
  std::set<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace(rng.below_int(v), v);
  while ((int)edges.size() < m) {
    int a = rng.below_int(n), b = rng.below_int(n);
    if (a != b) edges.emplace(std::min(a, b), std::max(a, b));
  }
  return Graph::from_edges(n, {edges.begin(), edges.end()});
}

void BM_degeneracy_order(benchmark::State& state) {
  Graph g = make_graph(state.range(0), 3 * state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(degeneracy_order(g));
}
BENCHMARK(BM_degeneracy_order)->Arg(1000)->Arg(10000);

void BM_wcol_of_order(benchmark::State& state) {
  Graph g = make_graph(1000, 3000, 2);
  Order order = degeneracy_order(g).first;
  int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wcol_of_order(g, order, r));
}
BENCHMARK(BM_wcol_of_order)->Arg(1)->Arg(3)->Arg(5);

void BM_wreach_sets(benchmark::State& state) {
  Graph g = make_graph(1000, 3000, 3);
  Order order = degeneracy_order(g).first;
  for (auto _ : state) benchmark::DoNotOptimize(wreach_sets(g, order, 3));
}
BENCHMARK(BM_wreach_sets);

void BM_greedy_wreach(benchmark::State& state) {
  Graph g = make_graph(state.range(0), 3 * state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(order_greedy_wreach(g, 3));
}
BENCHMARK(BM_greedy_wreach)->Arg(500)->Arg(2000);

void BM_greedy_sreach(benchmark::State& state) {
  Graph g = make_graph(state.range(0), 3 * state.range(0), 5);
  for (auto _ : state) benchmark::DoNotOptimize(order_greedy_sreach(g, 3));
}
BENCHMARK(BM_greedy_sreach)->Arg(500)->Arg(2000);

void BM_dtf_augment(benchmark::State& state) {
  Graph g = make_graph(400, 1200, 6);
  int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dtf_augment(g, r));
}
BENCHMARK(BM_dtf_augment)->Arg(2)->Arg(3);

void BM_flat_order(benchmark::State& state) {
  Graph g = make_graph(1000, 3000, 7);
  FlatConfig cfg = parse_flat_config("flat:2:sort:0");
  for (auto _ : state) benchmark::DoNotOptimize(order_flat(g, cfg));
}
BENCHMARK(BM_flat_order);

void BM_local_search(benchmark::State& state) {
  Graph g = make_graph(400, 1200, 8);
  Order start = order_simple(g, {SimpleVariant::DegreeDesc, 1, 0});
  for (auto _ : state) {
    LsBudget budget;
    budget.seed = 9;
    budget.max_iterations = 200;
    budget.max_no_improve = 50;
    benchmark::DoNotOptimize(local_search(g, start, 3, budget));
  }
}
BENCHMARK(BM_local_search);

void BM_uqw_ld(benchmark::State& state) {
  Graph g = make_graph(800, 2400, 10);
  std::vector<int> a(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) a[v] = v;
  for (auto _ : state) benchmark::DoNotOptimize(uqw_ld(g, a, 3, 10));
}
BENCHMARK(BM_uqw_ld);

}  // namespace

BENCHMARK_MAIN();
