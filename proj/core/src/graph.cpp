#include "netclass/graph.hpp"

#include <string>

namespace netclass {

namespace {

void check_vertex(Vertex x, int n, const char* what) {
  if (x < 1 || x > n)
    throw InputError(std::string(what) + " vertex " + std::to_string(x) + " out of range 1.." +
                     std::to_string(n));
}

}  // namespace

void validate(const Multigraph& g) {
  if (g.n < 0) throw InputError("negative vertex count");
  if (g.cost_scale < 1) throw InputError("cost scale must be positive");
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const MultiEdge& e = g.edges[i];
    if (e.id != static_cast<EdgeId>(i)) throw InputError("edge ids must be 0..m-1 in order");
    check_vertex(e.u, g.n, "edge");
    check_vertex(e.v, g.n, "edge");
  }
}

void validate(const Digraph& g) {
  if (g.n < 0) throw InputError("negative vertex count");
  for (size_t i = 0; i < g.arcs.size(); ++i) {
    const Arc& a = g.arcs[i];
    if (a.id != static_cast<int>(i)) throw InputError("arc ids must be 0..m-1 in order");
    check_vertex(a.from, g.n, "arc");
    check_vertex(a.to, g.n, "arc");
  }
}

}  // namespace netclass
