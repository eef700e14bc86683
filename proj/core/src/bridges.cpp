#include "netclass/bridges.hpp"

#include <algorithm>

namespace netclass {

std::vector<EdgeId> bridges(const Multigraph& g) {
  validate(g);
  const int n = g.n;
  struct Half {
    Vertex to;
    EdgeId eid;
  };
  std::vector<std::vector<Half>> adj(n + 1);
  for (const MultiEdge& e : g.edges) {
    if (e.u == e.v) continue;
    adj[e.u].push_back({e.v, e.id});
    adj[e.v].push_back({e.u, e.id});
  }

  std::vector<int> disc(n + 1, -1);
  std::vector<int> low(n + 1, 0);
  std::vector<EdgeId> out;
  int timer = 0;

  struct Frame {
    Vertex v;
    EdgeId in_eid;  // edge instance used to enter v; parallels keep other ids
    size_t next;
  };
  std::vector<Frame> frames;

  for (Vertex root = 1; root <= n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    frames.push_back({root, -1, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < adj[f.v].size()) {
        Half h = adj[f.v][f.next++];
        if (h.eid == f.in_eid) continue;
        if (disc[h.to] == -1) {
          disc[h.to] = low[h.to] = timer++;
          frames.push_back({h.to, h.eid, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[h.to]);
        }
      } else {
        Frame done = f;
        frames.pop_back();
        if (!frames.empty()) {
          Frame& p = frames.back();
          low[p.v] = std::min(low[p.v], low[done.v]);
          if (low[done.v] > disc[p.v]) out.push_back(done.in_eid);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace netclass
