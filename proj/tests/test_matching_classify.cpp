#include <vector>

#include "doctest.h"
#include "netclass/matching.hpp"
#include "netclass/matching_classify.hpp"
#include "netclass/oracle.hpp"
#include "testutil.hpp"

using namespace netclass;

namespace {

constexpr Category E = Category::Every;
constexpr Category S = Category::Some;
constexpr Category N = Category::Never;

BipartiteGraph k22(std::vector<Cost> costs) {
  BipartiteGraph g;
  g.n_left = 2;
  g.n_right = 2;
  g.has_costs = true;
  std::vector<std::pair<Vertex, Vertex>> pairs = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  for (int i = 0; i < 4; ++i) g.edges.push_back({pairs[i].first, pairs[i].second, costs[i], i});
  return g;
}

}  // namespace

TEST_CASE("skewed K22 forces the cheap diagonal") {
  auto c = classify_weighted(k22({1, 2, 2, 1}));
  CHECK(c.edge == std::vector<Category>{E, N, N, E});
  CHECK(c.left == std::vector<Category>{N, E, E});
  CHECK(c.right == std::vector<Category>{N, E, E});
}

TEST_CASE("uniform K22 leaves every edge exchangeable") {
  auto c = classify_weighted(k22({1, 1, 1, 1}));
  CHECK(c.edge == std::vector<Category>{S, S, S, S});
  CHECK(c.left == std::vector<Category>{N, E, E});
  CHECK(c.right == std::vector<Category>{N, E, E});
}

TEST_CASE("two left vertices competing for one right vertex") {
  BipartiteGraph g;
  g.n_left = 2;
  g.n_right = 1;
  g.edges = {{1, 1, 0, 0}, {2, 1, 0, 1}};
  auto c = classify_unweighted(g);
  CHECK(c.edge == std::vector<Category>{S, S});
  CHECK(c.left == std::vector<Category>{N, S, S});
  CHECK(c.right == std::vector<Category>{N, E});
}

TEST_CASE("a chain of three edges pins the outer two") {
  BipartiteGraph g;
  g.n_left = 2;
  g.n_right = 2;
  g.edges = {{1, 1, 0, 0}, {1, 2, 0, 1}, {2, 2, 0, 2}};
  auto c = classify_unweighted(g);
  CHECK(c.edge == std::vector<Category>{E, N, E});
  CHECK(c.left == std::vector<Category>{N, E, E});
  CHECK(c.right == std::vector<Category>{N, E, E});
}

TEST_CASE("parallel pair keeps the cheap copy and drops the dear one") {
  BipartiteGraph g;
  g.n_left = 1;
  g.n_right = 1;
  g.has_costs = true;
  g.edges = {{1, 1, 3, 0}, {1, 1, 1, 1}};
  auto c = classify_weighted(g);
  CHECK(c.edge == std::vector<Category>{N, E});
  CHECK(c.left == std::vector<Category>{N, E});
  CHECK(c.right == std::vector<Category>{N, E});
}

TEST_CASE("residual digraph carries edge arcs first, then auxiliary arcs") {
  BipartiteGraph g;
  g.n_left = 2;
  g.n_right = 2;
  g.edges = {{1, 1, 0, 0}, {1, 2, 0, 1}, {2, 2, 0, 2}};
  Matching m = max_matching(g);  // {0, 2}
  Digraph r = build_residual(g, m, ResidualSide::S, false);
  CHECK(r.n == residual_aux_vertex(g));
  REQUIRE(r.arcs.size() == 5);  // 3 edge arcs + 2 auxiliary (both left matched)
  // matched edge 0 points right to left
  CHECK(r.arcs[0].from == residual_right_vertex(g, 1));
  CHECK(r.arcs[0].to == residual_left_vertex(g, 1));
  CHECK(r.arcs[0].origin == 0);
  // unmatched edge 1 points left to right
  CHECK(r.arcs[1].from == residual_left_vertex(g, 1));
  CHECK(r.arcs[1].to == residual_right_vertex(g, 2));
  for (size_t i = 3; i < r.arcs.size(); ++i) CHECK(r.arcs[i].origin == kNoOrigin);
}

TEST_CASE("zero cost cycles are detected and their arcs reported") {
  Digraph g;
  g.n = 2;
  g.arcs = {{1, 2, 5, 0}, {2, 1, -5, 1}, {1, 2, 7, 2}};
  CHECK(zero_cost_cycle_edges(g) == std::vector<int>{0, 1});

  Digraph dag;
  dag.n = 3;
  dag.arcs = {{1, 2, 0, 0}, {2, 3, 0, 1}};
  CHECK(zero_cost_cycle_edges(dag).empty());

  Digraph zero_loop;
  zero_loop.n = 3;
  zero_loop.arcs = {{1, 2, 1, 0}, {2, 3, 2, 1}, {3, 1, -3, 2}, {1, 3, 9, 3}};
  CHECK(zero_cost_cycle_edges(zero_loop) == std::vector<int>{0, 1, 2});
}

TEST_CASE("negative cycles are refused") {
  Digraph g;
  g.n = 2;
  g.arcs = {{1, 2, 1, 0}, {2, 1, -3, 1}};
  CHECK_THROWS_AS(zero_cost_cycle_edges(g), InternalError);
}

TEST_CASE("a non optimal matching is rejected") {
  BipartiteGraph g;
  g.n_left = 2;
  g.n_right = 2;
  g.edges = {{1, 1, 0, 0}, {1, 2, 0, 1}, {2, 2, 0, 2}};
  Matching too_small;
  too_small.edge_ids = {1};
  CHECK_THROWS_AS(classify_unweighted(g, too_small), InputError);

  BipartiteGraph w = k22({1, 2, 2, 1});
  Matching too_dear;
  too_dear.edge_ids = {1, 2};
  too_dear.cost = 4;
  CHECK_THROWS_AS(classify_weighted(w, too_dear), InputError);
}

TEST_CASE("unweighted classification equals the enumeration oracle") {
  testutil::Rng rng(20240905);
  for (int iter = 0; iter < 300; ++iter) {
    BipartiteGraph g = testutil::random_bipartite(rng, 4, 8, false, 0, 0);
    auto actual = classify_unweighted(g);
    auto expected = matching_classification_oracle(g, false);
    auto report = compare(expected, actual);
    CHECK_MESSAGE(report.ok(), "iteration ", iter);
  }
}

TEST_CASE("weighted classification equals the enumeration oracle") {
  testutil::Rng rng(20240906);
  for (int iter = 0; iter < 300; ++iter) {
    BipartiteGraph g = testutil::random_bipartite(rng, 4, 8, true, 0, 3);
    auto actual = classify_weighted(g);
    auto expected = matching_classification_oracle(g, true);
    auto report = compare(expected, actual);
    CHECK_MESSAGE(report.ok(), "iteration ", iter);
  }
}

TEST_CASE("the result does not depend on the starting optimal matching") {
  testutil::Rng rng(20240907);
  for (int iter = 0; iter < 60; ++iter) {
    BipartiteGraph g = testutil::random_bipartite(rng, 3, 6, true, 0, 2);
    auto baseline_w = classify_weighted(g);
    for (const Matching& m : enum_optimal_matchings(g, true)) {
      CHECK(classify_weighted(g, m) == baseline_w);
    }
    auto baseline_u = classify_unweighted(g);
    for (const Matching& m : enum_optimal_matchings(g, false)) {
      CHECK(classify_unweighted(g, m) == baseline_u);
    }
  }
}
