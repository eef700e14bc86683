#pragma once

#include <functional>
#include <vector>

#include "netclass/graph.hpp"

namespace netclass {

enum class Direction { Forward, Reverse };

using ArcFilter = std::function<bool(const Arc&)>;

// Vertices reachable from `sources` over arcs accepted by `filter` (an empty
// filter accepts every arc). Reverse direction walks arcs head to tail.
// Returns a mask indexed by vertex; sources are always set.
std::vector<char> reachable(const Digraph& g, const std::vector<Vertex>& sources,
                            const ArcFilter& filter = {},
                            Direction direction = Direction::Forward);

}  // namespace netclass
