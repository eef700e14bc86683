#pragma once

#include "netclass/bipartite.hpp"

namespace netclass {

// Maximum-cardinality matching via layered augmenting phases, O(m * sqrt(n)).
// Among parallel edges of one vertex pair the lowest id is used.
Matching max_matching(const BipartiteGraph& g);

// Among all maximum matchings, one of minimum total cost. Successive
// shortest augmenting paths with vertex potentials, O(n^3) on dense inputs.
// Costs must be nonnegative. Among parallel edges of one vertex pair only
// the cheapest can be chosen, ties broken by lowest id.
Matching min_cost_max_matching(const BipartiteGraph& g);

}  // namespace netclass
