#include <vector>

#include "doctest.h"
#include "netclass/matching.hpp"
#include "netclass/oracle.hpp"
#include "testutil.hpp"

using namespace netclass;

namespace {

BipartiteGraph k22(std::vector<Cost> costs) {
  BipartiteGraph g;
  g.n_left = 2;
  g.n_right = 2;
  g.has_costs = !costs.empty();
  std::vector<std::pair<Vertex, Vertex>> pairs = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  for (int i = 0; i < 4; ++i) {
    g.edges.push_back({pairs[i].first, pairs[i].second,
                       g.has_costs ? costs[i] : 0, i});
  }
  return g;
}

}  // namespace

TEST_CASE("maximum matching saturates the unique perfect matching") {
  BipartiteGraph g;
  g.n_left = 2;
  g.n_right = 2;
  g.edges = {{1, 1, 0, 0}, {1, 2, 0, 1}, {2, 2, 0, 2}};
  Matching m = max_matching(g);
  CHECK(m.edge_ids == std::vector<EdgeId>{0, 2});
  CHECK(is_matching(g, m));
}

TEST_CASE("maximum matching handles empty and edgeless graphs") {
  BipartiteGraph g;
  g.n_left = 3;
  g.n_right = 2;
  Matching m = max_matching(g);
  CHECK(m.edge_ids.empty());
  CHECK(m.cost == 0);
}

TEST_CASE("parallel edges resolve to the lowest id unweighted, cheapest weighted") {
  BipartiteGraph g;
  g.n_left = 1;
  g.n_right = 1;
  g.has_costs = true;
  g.edges = {{1, 1, 3, 0}, {1, 1, 1, 1}};
  CHECK(max_matching(g).edge_ids == std::vector<EdgeId>{0});
  Matching cheap = min_cost_max_matching(g);
  CHECK(cheap.edge_ids == std::vector<EdgeId>{1});
  CHECK(cheap.cost == 1);
}

TEST_CASE("min cost matching picks the diagonal of a skewed K22") {
  BipartiteGraph g = k22({1, 2, 2, 1});
  Matching m = min_cost_max_matching(g);
  CHECK(m.edge_ids == std::vector<EdgeId>{0, 3});
  CHECK(m.cost == 2);
}

TEST_CASE("negative costs are rejected") {
  BipartiteGraph g = k22({1, -2, 2, 1});
  CHECK_THROWS_AS(min_cost_max_matching(g), InputError);
}

TEST_CASE("maximum matching size matches enumeration on random graphs") {
  testutil::Rng rng(20240903);
  for (int iter = 0; iter < 300; ++iter) {
    BipartiteGraph g = testutil::random_bipartite(rng, 4, 8, false, 0, 0);
    Matching m = max_matching(g);
    CHECK(is_matching(g, m));
    auto family = enum_optimal_matchings(g, false);
    CHECK(m.edge_ids.size() == family.front().edge_ids.size());
  }
}

TEST_CASE("min cost matching matches enumeration on random weighted graphs") {
  testutil::Rng rng(20240904);
  for (int iter = 0; iter < 300; ++iter) {
    BipartiteGraph g = testutil::random_bipartite(rng, 4, 8, true, 0, 3);
    Matching m = min_cost_max_matching(g);
    CHECK(is_matching(g, m));
    auto family = enum_optimal_matchings(g, true);
    CHECK(m.edge_ids.size() == family.front().edge_ids.size());
    CHECK(m.cost == family.front().cost);
  }
}
