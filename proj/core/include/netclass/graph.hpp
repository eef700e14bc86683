#pragma once

#include <vector>

#include "netclass/types.hpp"

namespace netclass {

struct MultiEdge {
  Vertex u = 0;
  Vertex v = 0;
  Cost cost = 0;
  EdgeId id = 0;
};

// Undirected multigraph. Loops and parallel edges are allowed; ids run
// 0..m-1 in input order so parallel edges stay distinguishable.
struct Multigraph {
  int n = 0;
  std::vector<MultiEdge> edges;
  bool has_costs = false;
  long long cost_scale = 1;
};

void validate(const Multigraph& g);

inline constexpr EdgeId kNoOrigin = -1;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  Cost cost = 0;
  int id = 0;
  // Undirected edge or input arc this arc was derived from, if any.
  EdgeId origin = kNoOrigin;
};

// Directed multigraph; arc costs may be negative.
struct Digraph {
  int n = 0;
  std::vector<Arc> arcs;
};

void validate(const Digraph& g);

}  // namespace netclass
