#pragma once

#include <vector>

#include "netclass/graph.hpp"

namespace netclass {

// Edges whose removal increases the number of connected components, as
// sorted edge ids. A loop is never a bridge, nor is either copy of a
// parallel pair. O(n + m).
std::vector<EdgeId> bridges(const Multigraph& g);

}  // namespace netclass
