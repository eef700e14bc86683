#pragma once

#include <vector>

#include "netclass/graph.hpp"

namespace netclass {

// Strongly connected components. Returns component ids indexed by vertex
// (entry 0 unused), contiguous from 0; two vertices share an id iff each
// reaches the other. Iterative, so deep graphs cannot overflow the stack.
std::vector<int> strongly_connected_components(const Digraph& g);

}  // namespace netclass
