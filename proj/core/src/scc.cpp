#include "netclass/scc.hpp"

#include <algorithm>

namespace netclass {

std::vector<int> strongly_connected_components(const Digraph& g) {
  validate(g);
  const int n = g.n;
  std::vector<std::vector<Vertex>> adj(n + 1);
  for (const Arc& a : g.arcs) adj[a.from].push_back(a.to);

  std::vector<int> index(n + 1, -1);
  std::vector<int> low(n + 1, 0);
  std::vector<int> comp(n + 1, -1);
  std::vector<char> on_stack(n + 1, 0);
  std::vector<Vertex> stack;
  stack.reserve(n);

  struct Frame {
    Vertex v;
    size_t next;
  };
  std::vector<Frame> frames;
  int next_index = 0;
  int next_comp = 0;

  for (Vertex root = 1; root <= n; ++root) {
    if (index[root] != -1) continue;
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    frames.push_back({root, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      Vertex v = f.v;
      if (f.next < adj[v].size()) {
        Vertex w = adj[v][f.next++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          while (true) {
            Vertex w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = next_comp;
            if (w == v) break;
          }
          ++next_comp;
        }
        frames.pop_back();
        if (!frames.empty()) {
          Vertex parent = frames.back().v;
          low[parent] = std::min(low[parent], low[v]);
        }
      }
    }
  }
  return comp;
}

}  // namespace netclass
