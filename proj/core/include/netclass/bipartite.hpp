#pragma once

#include <vector>

#include "netclass/types.hpp"

namespace netclass {

struct BipartiteEdge {
  Vertex u = 0;  // left endpoint, 1..n_left
  Vertex v = 0;  // right endpoint, 1..n_right
  Cost cost = 0;
  EdgeId id = 0;
};

// Bipartite multigraph; parallel edges are allowed and costs, when present,
// are nonnegative.
struct BipartiteGraph {
  int n_left = 0;
  int n_right = 0;
  std::vector<BipartiteEdge> edges;
  bool has_costs = false;
  long long cost_scale = 1;
};

void validate(const BipartiteGraph& g);

struct Matching {
  std::vector<EdgeId> edge_ids;  // sorted ascending
  Cost cost = 0;
};

// True iff the ids name existing edges, none repeats, and no two share an
// endpoint.
bool is_matching(const BipartiteGraph& g, const Matching& m);

}  // namespace netclass
