#include "netclass/mst_classify.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "netclass/bridges.hpp"
#include "netclass/dsu.hpp"

namespace netclass {

namespace {

void require_connected(const Multigraph& g) {
  validate(g);
  if (g.n < 1) throw InputError("graph has no vertices");
  Dsu dsu(g.n);
  for (const MultiEdge& e : g.edges)
    if (e.u != e.v) dsu.unite(e.u, e.v);
  if (dsu.component_count() != 1) throw InputError("graph is not connected");
}

}  // namespace

std::vector<Category> classify_mst_edges(const Multigraph& g) {
  require_connected(g);
  const int m = static_cast<int>(g.edges.size());
  std::vector<Category> out(m, Category::Never);

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&g](int a, int b) {
    if (g.edges[a].cost != g.edges[b].cost) return g.edges[a].cost < g.edges[b].cost;
    return a < b;
  });

  // Process equal-cost groups over the contraction of all cheaper groups:
  // a group edge is forced iff it bridges the contracted multigraph, dead
  // iff it closes into a single component (a loop there), optional else.
  Dsu dsu(g.n);
  size_t i = 0;
  while (i < order.size()) {
    size_t j = i;
    while (j < order.size() && g.edges[order[j]].cost == g.edges[order[i]].cost) ++j;

    Multigraph contracted;
    std::vector<EdgeId> member;  // contracted edge k came from this input edge
    std::unordered_map<Vertex, Vertex> label;
    auto compact = [&](Vertex x) {
      Vertex root = dsu.find(x);
      auto [it, inserted] = label.try_emplace(root, static_cast<Vertex>(label.size()) + 1);
      return it->second;
    };
    for (size_t k = i; k < j; ++k) {
      const MultiEdge& e = g.edges[order[k]];
      Vertex cu = compact(e.u);
      Vertex cv = compact(e.v);
      contracted.edges.push_back({cu, cv, 0, static_cast<EdgeId>(contracted.edges.size())});
      member.push_back(e.id);
    }
    contracted.n = static_cast<int>(label.size());

    std::vector<char> forced(contracted.edges.size(), 0);
    for (EdgeId b : bridges(contracted)) forced[b] = 1;
    for (size_t k = 0; k < contracted.edges.size(); ++k) {
      const MultiEdge& ce = contracted.edges[k];
      if (ce.u == ce.v)
        out[member[k]] = Category::Never;
      else
        out[member[k]] = forced[k] ? Category::Every : Category::Some;
    }

    for (size_t k = i; k < j; ++k) dsu.unite(g.edges[order[k]].u, g.edges[order[k]].v);
    i = j;
  }
  return out;
}

std::vector<Category> classify_spanning_tree_edges(const Multigraph& g) {
  require_connected(g);
  std::vector<Category> out(g.edges.size(), Category::Some);
  for (const MultiEdge& e : g.edges)
    if (e.u == e.v) out[e.id] = Category::Never;
  for (EdgeId b : bridges(g)) out[b] = Category::Every;
  return out;
}

}  // namespace netclass
