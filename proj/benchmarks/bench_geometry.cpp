#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "netclass/geometry.hpp"

using namespace netclass;

namespace {

PolygonInstance random_polygon(int n) {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> coord(-100, 100);
  std::uniform_real_distribution<double> ratio(0.1, 0.9);
  std::vector<Point> vertices;
  std::vector<double> t;
  for (int i = 0; i < n; ++i) {
    vertices.push_back({coord(rng), coord(rng)});
    t.push_back(ratio(rng));
  }
  return {polygon_forward(vertices, t), t};
}

void BM_PolygonReconstruct(benchmark::State& state) {
  PolygonInstance inst = random_polygon(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(polygon_reconstruct(inst));
}
BENCHMARK(BM_PolygonReconstruct)->Arg(10)->Arg(100)->Arg(1000);

void BM_TriangleClosed(benchmark::State& state) {
  TriangleInstance inst{2.0, 2.0, 1.7320508};
  for (auto _ : state) benchmark::DoNotOptimize(triangle_from_median_closed(inst));
}
BENCHMARK(BM_TriangleClosed);

void BM_TriangleSearch(benchmark::State& state) {
  TriangleInstance inst{2.0, 2.0, 1.7320508};
  for (auto _ : state) benchmark::DoNotOptimize(triangle_from_median_search(inst));
}
BENCHMARK(BM_TriangleSearch);

}  // namespace
