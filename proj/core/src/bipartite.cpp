#include "netclass/bipartite.hpp"

#include <string>

namespace netclass {

void validate(const BipartiteGraph& g) {
  if (g.n_left < 0 || g.n_right < 0) throw InputError("negative vertex count");
  if (g.cost_scale < 1) throw InputError("cost scale must be positive");
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const BipartiteEdge& e = g.edges[i];
    if (e.id != static_cast<EdgeId>(i)) throw InputError("edge ids must be 0..m-1 in order");
    if (e.u < 1 || e.u > g.n_left)
      throw InputError("left vertex " + std::to_string(e.u) + " out of range 1.." +
                       std::to_string(g.n_left));
    if (e.v < 1 || e.v > g.n_right)
      throw InputError("right vertex " + std::to_string(e.v) + " out of range 1.." +
                       std::to_string(g.n_right));
    if (g.has_costs && e.cost < 0) throw InputError("negative edge cost");
  }
}

bool is_matching(const BipartiteGraph& g, const Matching& m) {
  std::vector<char> left_used(g.n_left + 1, 0);
  std::vector<char> right_used(g.n_right + 1, 0);
  std::vector<char> edge_used(g.edges.size(), 0);
  for (EdgeId id : m.edge_ids) {
    if (id < 0 || id >= static_cast<EdgeId>(g.edges.size())) return false;
    if (edge_used[id]) return false;
    edge_used[id] = 1;
    const BipartiteEdge& e = g.edges[id];
    if (left_used[e.u] || right_used[e.v]) return false;
    left_used[e.u] = 1;
    right_used[e.v] = 1;
  }
  return true;
}

}  // namespace netclass
