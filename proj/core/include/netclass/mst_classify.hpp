#pragma once

#include <vector>

#include "netclass/graph.hpp"

namespace netclass {

// Category per edge id relative to the family of minimum spanning trees.
// Requires a connected multigraph; costs of any sign are fine. Processes
// edges in equal-cost groups over the contraction of all cheaper groups:
// within a group, bridges of the contracted multigraph are in every minimum
// spanning tree, loops in none, everything else in some. O(m log m).
std::vector<Category> classify_mst_edges(const Multigraph& g);

// Category per edge id relative to all spanning trees, costs ignored:
// bridges are in every spanning tree, loops in none, the rest in some.
std::vector<Category> classify_spanning_tree_edges(const Multigraph& g);

}  // namespace netclass
