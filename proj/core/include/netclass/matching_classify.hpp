#pragma once

#include <vector>

#include "netclass/bipartite.hpp"
#include "netclass/graph.hpp"

namespace netclass {

// Which auxiliary vertex the residual digraph gets: S attached to the left
// side or T attached to the right side.
enum class ResidualSide { S, T };

// Residual vertex numbering: left u keeps its index, right v becomes
// n_left + v, the auxiliary vertex is n_left + n_right + 1.
Vertex residual_left_vertex(const BipartiteGraph& g, Vertex u);
Vertex residual_right_vertex(const BipartiteGraph& g, Vertex v);
Vertex residual_aux_vertex(const BipartiteGraph& g);

// Residual digraph of a matching. Matched edges point right to left with
// cost -c, unmatched edges left to right with cost +c (zero when
// with_costs is false). Side S adds S->u for every unmatched left u and
// u->S for every matched left u; side T adds v->T for every unmatched right
// v and T->v for every matched right v. Edge-derived arcs keep their edge id
// in `origin` and come first, in edge order.
Digraph build_residual(const BipartiteGraph& g, const Matching& m, ResidualSide side,
                       bool with_costs);

// Ids of arcs lying on some directed cycle of total cost zero. Requires a
// graph without negative cycles; throws InternalError on one.
std::vector<int> zero_cost_cycle_edges(const Digraph& g);

// Category per edge id and per vertex of each side (vertex entries are
// 1-indexed, entry 0 unused). Edge categories are relative to the family of
// optimal matchings, vertex categories to the sets of vertices they cover.
struct BipartiteClassification {
  std::vector<Category> edge;
  std::vector<Category> left;
  std::vector<Category> right;

  bool operator==(const BipartiteClassification&) const = default;
};

// Classification relative to minimum-cost maximum matchings.
BipartiteClassification classify_weighted(const BipartiteGraph& g);
// Classification relative to maximum matchings, costs ignored.
BipartiteClassification classify_unweighted(const BipartiteGraph& g);

// Same, starting from a caller-supplied optimal matching. The result does
// not depend on which optimal matching is passed.
BipartiteClassification classify_weighted(const BipartiteGraph& g, const Matching& m);
BipartiteClassification classify_unweighted(const BipartiteGraph& g, const Matching& m);

}  // namespace netclass
