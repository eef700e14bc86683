#pragma once

#include <iosfwd>
#include <string>

#include "netclass/bipartite.hpp"
#include "netclass/flow.hpp"
#include "netclass/geometry.hpp"
#include "netclass/graph.hpp"

namespace netclass {

// Readers for the whitespace-separated instance formats. '#' starts a
// comment running to end of line; blank lines are skipped; every record sits
// on one line. Errors mention the 1-based line number.

// Header "nL nR m", then m lines "u v [cost]". With weighted the cost column
// is required; without it the column is optional but must be used
// consistently.
BipartiteGraph read_bipartite(std::istream& in, bool weighted);

// Header "n m", then m lines "u v cost" (or "u v" when with_costs is false).
Multigraph read_multigraph(std::istream& in, bool with_costs);

// Header "n m nS nT", a line of nS sources, a line of nT sinks, then m lines
// "u v cap" with integer capacities. Sources and sinks must be disjoint and
// nonempty.
FlowNetwork read_flow_network(std::istream& in, bool directed);

// Header "N", then N lines "xp yp t".
PolygonInstance read_polygon(std::istream& in);

// Serializers producing the same formats; reading the result back yields an
// identical structure.
std::string write_bipartite(const BipartiteGraph& g);
std::string write_multigraph(const Multigraph& g);
std::string write_flow_network(const FlowNetwork& net);
std::string write_polygon(const PolygonInstance& inst);

}  // namespace netclass
