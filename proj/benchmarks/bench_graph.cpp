#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "netclass/flow.hpp"
#include "netclass/matching_classify.hpp"
#include "netclass/mst_classify.hpp"

using namespace netclass;

namespace {

BipartiteGraph complete_bipartite(int side, bool costs) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> cost(0, 99);
  BipartiteGraph g;
  g.n_left = side;
  g.n_right = side;
  g.has_costs = costs;
  int id = 0;
  for (Vertex u = 1; u <= side; ++u) {
    for (Vertex v = 1; v <= side; ++v) {
      g.edges.push_back({u, v, costs ? cost(rng) : 0, id++});
    }
  }
  return g;
}

Multigraph random_multigraph(int n, int m) {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> cost(1, 100);
  Multigraph g;
  g.n = n;
  g.has_costs = true;
  for (Vertex v = 2; v <= n; ++v) {
    g.edges.push_back({std::uniform_int_distribution<Vertex>(1, v - 1)(rng), v, cost(rng), 0});
  }
  std::uniform_int_distribution<Vertex> any(1, n);
  while (static_cast<int>(g.edges.size()) < m) {
    g.edges.push_back({any(rng), any(rng), cost(rng), 0});
  }
  for (int i = 0; i < m; ++i) g.edges[i].id = i;
  return g;
}

FlowNetwork random_network(int n, int m) {
  std::mt19937 rng(3);
  FlowNetwork net;
  net.n = n;
  net.sources = {1};
  net.sinks = {n};
  std::uniform_int_distribution<Vertex> any(1, n);
  for (Vertex v = 2; v <= n; ++v) {
    net.arcs.push_back({std::uniform_int_distribution<Vertex>(1, v - 1)(rng), v, 1, 0});
  }
  while (static_cast<int>(net.arcs.size()) < m) {
    Vertex u = any(rng);
    Vertex v = any(rng);
    if (u != v) net.arcs.push_back({u, v, 1, 0});
  }
  for (int i = 0; i < m; ++i) net.arcs[i].id = i;
  return net;
}

void BM_ClassifyUnweighted(benchmark::State& state) {
  BipartiteGraph g = complete_bipartite(static_cast<int>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(classify_unweighted(g));
}
BENCHMARK(BM_ClassifyUnweighted)->Arg(50)->Arg(100)->Arg(150);

void BM_ClassifyWeighted(benchmark::State& state) {
  BipartiteGraph g = complete_bipartite(static_cast<int>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(classify_weighted(g));
}
BENCHMARK(BM_ClassifyWeighted)->Arg(50)->Arg(100)->Arg(150);

void BM_ClassifyMst(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Multigraph g = random_multigraph(n, 10 * n);
  for (auto _ : state) benchmark::DoNotOptimize(classify_mst_edges(g));
}
BENCHMARK(BM_ClassifyMst)->Arg(1000)->Arg(10000);

void BM_UpwardCritical(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  FlowNetwork net = random_network(n, 10 * n);
  for (auto _ : state) benchmark::DoNotOptimize(upward_critical(net, CriticalMode::Residual));
}
BENCHMARK(BM_UpwardCritical)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
