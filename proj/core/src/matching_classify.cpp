#include "netclass/matching_classify.hpp"

#include <algorithm>

#include "netclass/matching.hpp"
#include "netclass/scc.hpp"

namespace netclass {

Vertex residual_left_vertex(const BipartiteGraph& g, Vertex u) {
  (void)g;
  return u;
}

Vertex residual_right_vertex(const BipartiteGraph& g, Vertex v) { return g.n_left + v; }

Vertex residual_aux_vertex(const BipartiteGraph& g) { return g.n_left + g.n_right + 1; }

Digraph build_residual(const BipartiteGraph& g, const Matching& m, ResidualSide side,
                       bool with_costs) {
  validate(g);
  if (!is_matching(g, m)) throw InputError("not a matching of the given graph");

  std::vector<char> in_matching(g.edges.size(), 0);
  std::vector<char> left_matched(g.n_left + 1, 0);
  std::vector<char> right_matched(g.n_right + 1, 0);
  for (EdgeId id : m.edge_ids) {
    in_matching[id] = 1;
    left_matched[g.edges[id].u] = 1;
    right_matched[g.edges[id].v] = 1;
  }

  Digraph d;
  d.n = residual_aux_vertex(g);
  const Vertex aux = residual_aux_vertex(g);
  int next_id = 0;
  for (const BipartiteEdge& e : g.edges) {
    Cost c = with_costs ? e.cost : 0;
    if (in_matching[e.id])
      d.arcs.push_back({residual_right_vertex(g, e.v), residual_left_vertex(g, e.u), -c,
                        next_id++, e.id});
    else
      d.arcs.push_back({residual_left_vertex(g, e.u), residual_right_vertex(g, e.v), c,
                        next_id++, e.id});
  }
  if (side == ResidualSide::S) {
    for (Vertex u = 1; u <= g.n_left; ++u) {
      if (left_matched[u])
        d.arcs.push_back({residual_left_vertex(g, u), aux, 0, next_id++, kNoOrigin});
      else
        d.arcs.push_back({aux, residual_left_vertex(g, u), 0, next_id++, kNoOrigin});
    }
  } else {
    for (Vertex v = 1; v <= g.n_right; ++v) {
      if (right_matched[v])
        d.arcs.push_back({aux, residual_right_vertex(g, v), 0, next_id++, kNoOrigin});
      else
        d.arcs.push_back({residual_right_vertex(g, v), aux, 0, next_id++, kNoOrigin});
    }
  }
  return d;
}

std::vector<int> zero_cost_cycle_edges(const Digraph& g) {
  validate(g);
  const int n = g.n;

  // Potentials via Bellman-Ford from a virtual root with zero-cost arcs to
  // every vertex; starting every distance at 0 plays the root's role.
  std::vector<Cost> dist(n + 1, 0);
  int rounds = 0;
  bool changed = true;
  while (changed) {
    if (++rounds > n + 1) throw InternalError("negative-cost cycle: matching not optimal");
    changed = false;
    for (const Arc& a : g.arcs) {
      if (dist[a.from] + a.cost < dist[a.to]) {
        dist[a.to] = dist[a.from] + a.cost;
        changed = true;
      }
    }
  }

  // Reduced costs are nonnegative, so a zero-cost cycle can use only arcs of
  // reduced cost zero; among those, exactly the arcs inside one SCC close
  // such a cycle.
  Digraph zero;
  zero.n = n;
  std::vector<int> original_id;
  for (const Arc& a : g.arcs)
    if (dist[a.from] + a.cost == dist[a.to]) {
      Arc copy = a;
      copy.id = static_cast<int>(zero.arcs.size());
      zero.arcs.push_back(copy);
      original_id.push_back(a.id);
    }
  std::vector<int> comp = strongly_connected_components(zero);

  std::vector<int> out;
  for (size_t i = 0; i < zero.arcs.size(); ++i)
    if (comp[zero.arcs[i].from] == comp[zero.arcs[i].to]) out.push_back(original_id[i]);
  return out;
}

namespace {

BipartiteClassification classify_core(const BipartiteGraph& g, const Matching& m,
                                      bool with_costs) {
  Digraph g1 = build_residual(g, m, ResidualSide::S, with_costs);
  Digraph g2 = build_residual(g, m, ResidualSide::T, with_costs);

  const Vertex aux = residual_aux_vertex(g);
  const int m_edges = static_cast<int>(g.edges.size());
  std::vector<char> swappable(m_edges, 0);
  std::vector<char> left_flex(g.n_left + 1, 0);
  std::vector<char> right_flex(g.n_right + 1, 0);

  // An edge arc on a zero-cost cycle marks an exchangeable edge; an
  // auxiliary arc on one marks a vertex whose matched/unmatched state can
  // flip between optima.
  for (int aid : zero_cost_cycle_edges(g1)) {
    const Arc& a = g1.arcs[aid];
    if (a.origin != kNoOrigin)
      swappable[a.origin] = 1;
    else
      left_flex[a.from == aux ? a.to : a.from] = 1;
  }
  for (int aid : zero_cost_cycle_edges(g2)) {
    const Arc& a = g2.arcs[aid];
    if (a.origin != kNoOrigin)
      swappable[a.origin] = 1;
    else
      right_flex[(a.from == aux ? a.to : a.from) - g.n_left] = 1;
  }

  std::vector<char> in_matching(m_edges, 0);
  std::vector<char> left_matched(g.n_left + 1, 0);
  std::vector<char> right_matched(g.n_right + 1, 0);
  for (EdgeId id : m.edge_ids) {
    in_matching[id] = 1;
    left_matched[g.edges[id].u] = 1;
    right_matched[g.edges[id].v] = 1;
  }

  BipartiteClassification out;
  out.edge.resize(m_edges);
  for (int i = 0; i < m_edges; ++i) {
    if (swappable[i])
      out.edge[i] = Category::Some;
    else
      out.edge[i] = in_matching[i] ? Category::Every : Category::Never;
  }
  out.left.assign(g.n_left + 1, Category::Never);
  for (Vertex u = 1; u <= g.n_left; ++u) {
    if (left_flex[u])
      out.left[u] = Category::Some;
    else if (left_matched[u])
      out.left[u] = Category::Every;
  }
  out.right.assign(g.n_right + 1, Category::Never);
  for (Vertex v = 1; v <= g.n_right; ++v) {
    if (right_flex[v])
      out.right[v] = Category::Some;
    else if (right_matched[v])
      out.right[v] = Category::Every;
  }
  return out;
}

void require_optimal(const BipartiteGraph& g, const Matching& m, bool weighted) {
  if (!is_matching(g, m)) throw InputError("not a matching of the given graph");
  if (weighted) {
    Matching best = min_cost_max_matching(g);
    Cost total = 0;
    for (EdgeId id : m.edge_ids) total += g.edges[id].cost;
    if (m.edge_ids.size() != best.edge_ids.size() || total != best.cost)
      throw InputError("matching is not a minimum-cost maximum matching");
  } else {
    Matching best = max_matching(g);
    if (m.edge_ids.size() != best.edge_ids.size())
      throw InputError("matching is not a maximum matching");
  }
}

}  // namespace

BipartiteClassification classify_weighted(const BipartiteGraph& g) {
  validate(g);
  for (const BipartiteEdge& e : g.edges)
    if (e.cost < 0) throw InputError("negative edge cost");
  return classify_core(g, min_cost_max_matching(g), true);
}

BipartiteClassification classify_unweighted(const BipartiteGraph& g) {
  validate(g);
  return classify_core(g, max_matching(g), false);
}

BipartiteClassification classify_weighted(const BipartiteGraph& g, const Matching& m) {
  validate(g);
  require_optimal(g, m, true);
  return classify_core(g, m, true);
}

BipartiteClassification classify_unweighted(const BipartiteGraph& g, const Matching& m) {
  validate(g);
  require_optimal(g, m, false);
  return classify_core(g, m, false);
}

}  // namespace netclass
