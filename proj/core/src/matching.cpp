#include "netclass/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>
#include <vector>

namespace netclass {

namespace {

struct PairEdge {
  Vertex u = 0;
  Vertex v = 0;
  Cost cost = 0;
  EdgeId id = 0;
};

// One representative per (u, v) pair: the cheapest when by_cost, otherwise
// the lowest id; cost ties also break by lowest id.
std::vector<PairEdge> collapse(const BipartiteGraph& g, bool by_cost) {
  std::vector<PairEdge> all;
  all.reserve(g.edges.size());
  for (const BipartiteEdge& e : g.edges) all.push_back({e.u, e.v, e.cost, e.id});
  std::sort(all.begin(), all.end(), [by_cost](const PairEdge& a, const PairEdge& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    if (by_cost && a.cost != b.cost) return a.cost < b.cost;
    return a.id < b.id;
  });
  std::vector<PairEdge> out;
  for (const PairEdge& e : all)
    if (out.empty() || out.back().u != e.u || out.back().v != e.v) out.push_back(e);
  return out;
}

Matching assemble(const std::vector<PairEdge>& edges, const std::vector<int>& chosen) {
  Matching m;
  for (int ei : chosen) {
    m.edge_ids.push_back(edges[ei].id);
    m.cost += edges[ei].cost;
  }
  std::sort(m.edge_ids.begin(), m.edge_ids.end());
  return m;
}

}  // namespace

Matching max_matching(const BipartiteGraph& g) {
  validate(g);
  const int nL = g.n_left;
  const int nR = g.n_right;
  const std::vector<PairEdge> edges = collapse(g, false);
  std::vector<std::vector<int>> adj(nL + 1);
  for (size_t i = 0; i < edges.size(); ++i) adj[edges[i].u].push_back(static_cast<int>(i));

  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<Vertex> match_left(nL + 1, 0);
  std::vector<Vertex> match_right(nR + 1, 0);
  std::vector<int> dist(nL + 1, kInf);
  std::vector<size_t> it(nL + 1, 0);

  auto bfs = [&]() {
    std::vector<Vertex> queue;
    for (Vertex u = 1; u <= nL; ++u) {
      if (match_left[u] == 0) {
        dist[u] = 0;
        queue.push_back(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool found = false;
    for (size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (int ei : adj[u]) {
        Vertex w = match_right[edges[ei].v];
        if (w == 0) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  };

  auto dfs = [&](auto&& self, Vertex u) -> bool {
    for (size_t& i = it[u]; i < adj[u].size(); ++i) {
      Vertex v = edges[adj[u][i]].v;
      Vertex w = match_right[v];
      if (w == 0 || (dist[w] == dist[u] + 1 && self(self, w))) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (Vertex u = 1; u <= nL; ++u)
      if (match_left[u] == 0) dfs(dfs, u);
  }

  std::vector<int> chosen;
  for (Vertex u = 1; u <= nL; ++u) {
    if (match_left[u] == 0) continue;
    Vertex v = match_left[u];
    for (int ei : adj[u])
      if (edges[ei].v == v) {
        chosen.push_back(ei);
        break;
      }
  }
  return assemble(edges, chosen);
}

Matching min_cost_max_matching(const BipartiteGraph& g) {
  validate(g);
  for (const BipartiteEdge& e : g.edges)
    if (e.cost < 0) throw InputError("negative edge cost");

  const int nL = g.n_left;
  const int nR = g.n_right;
  const std::vector<PairEdge> edges = collapse(g, true);
  std::vector<std::vector<int>> adj(nL + 1);
  for (size_t i = 0; i < edges.size(); ++i) adj[edges[i].u].push_back(static_cast<int>(i));

  constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
  std::vector<Cost> pot_left(nL + 1, 0);
  std::vector<Cost> pot_right(nR + 1, 0);
  std::vector<Vertex> match_left(nL + 1, 0);
  std::vector<Vertex> match_right(nR + 1, 0);
  std::vector<int> match_edge_right(nR + 1, -1);  // edge index matched at v

  std::vector<Cost> dist_left(nL + 1);
  std::vector<Cost> dist_right(nR + 1);
  std::vector<int> pre_right(nR + 1);  // edge index that relaxed v

  // (distance, is_right, vertex) min-heap
  using Item = std::tuple<Cost, int, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;

  while (true) {
    std::fill(dist_left.begin(), dist_left.end(), kInf);
    std::fill(dist_right.begin(), dist_right.end(), kInf);
    std::fill(pre_right.begin(), pre_right.end(), -1);
    for (Vertex u = 1; u <= nL; ++u) {
      if (match_left[u] == 0) {
        dist_left[u] = 0;
        heap.push({0, 0, u});
      }
    }
    while (!heap.empty()) {
      auto [d, is_right, x] = heap.top();
      heap.pop();
      if (!is_right) {
        if (d != dist_left[x]) continue;
        for (int ei : adj[x]) {
          Vertex v = edges[ei].v;
          if (match_right[v] == x) continue;
          // reduced cost; nonnegative while potentials stay feasible
          Cost nd = d + edges[ei].cost + pot_left[x] - pot_right[v];
          if (nd < dist_right[v]) {
            dist_right[v] = nd;
            pre_right[v] = ei;
            heap.push({nd, 1, v});
          }
        }
      } else {
        if (d != dist_right[x]) continue;
        Vertex u = match_right[x];
        if (u != 0) {
          Cost nd = d - edges[match_edge_right[x]].cost + pot_right[x] - pot_left[u];
          if (nd < dist_left[u]) {
            dist_left[u] = nd;
            heap.push({nd, 0, u});
          }
        }
      }
    }

    Vertex target = 0;
    Cost best = kInf;
    for (Vertex v = 1; v <= nR; ++v)
      if (match_right[v] == 0 && dist_right[v] < best) {
        best = dist_right[v];
        target = v;
      }
    if (target == 0) break;

    // unreached vertices shift by the full distance so arcs into the
    // reached region keep nonnegative reduced costs
    for (Vertex u = 1; u <= nL; ++u) pot_left[u] += std::min(dist_left[u], best);
    for (Vertex v = 1; v <= nR; ++v) pot_right[v] += std::min(dist_right[v], best);

    Vertex v = target;
    while (true) {
      int ei = pre_right[v];
      Vertex u = edges[ei].u;
      Vertex prev = match_left[u];
      match_left[u] = v;
      match_right[v] = u;
      match_edge_right[v] = ei;
      if (prev == 0) break;
      v = prev;
    }
  }

  std::vector<int> chosen;
  for (Vertex v = 1; v <= nR; ++v)
    if (match_right[v] != 0) chosen.push_back(match_edge_right[v]);
  return assemble(edges, chosen);
}

}  // namespace netclass
