#pragma once

#include <vector>

#include "netclass/types.hpp"

namespace netclass {

struct FlowArc {
  Vertex u = 0;
  Vertex v = 0;
  long long cap = 0;
  int id = 0;
};

// Flow network with integer capacities and possibly several sources and
// sinks. When directed is false each arc is an undirected edge usable in
// both directions, with one shared capacity.
struct FlowNetwork {
  int n = 0;
  std::vector<FlowArc> arcs;
  std::vector<Vertex> sources;
  std::vector<Vertex> sinks;
  bool directed = true;
};

void validate(const FlowNetwork& net);

// flow[i] is the flow on arc i. For undirected networks it is the net flow
// along the listed direction and may be negative.
struct FlowAssignment {
  std::vector<long long> flow;
  long long value = 0;
};

// True iff the assignment respects capacities, conserves flow at every
// non-terminal vertex, and ships `value` out of the sources and into the
// sinks.
bool check_flow(const FlowNetwork& net, const FlowAssignment& fa);

// Maximum flow via blocking flows on level graphs (Dinic). Multiple sources
// and sinks are joined through an auxiliary super source and super sink.
FlowAssignment max_flow(const FlowNetwork& net);

enum class CriticalMode {
  // Source-side reachability over arcs with f < cap only; can miss arcs whose
  // saturation is witnessed only through residual (backward) steps.
  Paper,
  // Full residual reachability; agrees with the capacity-increment oracle.
  Residual,
};

// Arcs whose capacity increase by one unit raises the maximum flow value,
// as sorted arc ids. Directed networks only.
std::vector<int> upward_critical(const FlowNetwork& net, CriticalMode mode);

// Undirected variant: an edge is critical when raising its capacity raises
// the maximum flow, tested per orientation on a directed twin-arc expansion.
std::vector<int> upward_critical_undirected(const FlowNetwork& net, CriticalMode mode);

}  // namespace netclass
