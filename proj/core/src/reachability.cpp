#include "netclass/reachability.hpp"

#include <string>

namespace netclass {

std::vector<char> reachable(const Digraph& g, const std::vector<Vertex>& sources,
                            const ArcFilter& filter, Direction direction) {
  validate(g);
  std::vector<std::vector<const Arc*>> adj(g.n + 1);
  for (const Arc& a : g.arcs) {
    Vertex tail = direction == Direction::Forward ? a.from : a.to;
    adj[tail].push_back(&a);
  }
  std::vector<char> seen(g.n + 1, 0);
  std::vector<Vertex> queue;
  queue.reserve(g.n);
  for (Vertex s : sources) {
    if (s < 1 || s > g.n)
      throw InputError("source vertex " + std::to_string(s) + " out of range");
    if (!seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (const Arc* a : adj[v]) {
      if (filter && !filter(*a)) continue;
      Vertex w = direction == Direction::Forward ? a->to : a->from;
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace netclass
