#include "netclass/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "netclass/dsu.hpp"

namespace netclass {

std::vector<Matching> enum_optimal_matchings(const BipartiteGraph& g, bool weighted) {
  validate(g);
  if (static_cast<long long>(g.n_left) * g.n_right > 20)
    throw OracleLimitError("side product exceeds the matching enumeration guard");
  if (g.edges.size() > 20)
    throw OracleLimitError("edge count exceeds the matching enumeration guard");
  if (weighted)
    for (const BipartiteEdge& e : g.edges)
      if (e.cost < 0) throw InputError("negative edge cost");

  std::vector<Matching> best;
  size_t best_size = 0;
  Cost best_cost = 0;

  std::vector<EdgeId> current;
  std::vector<char> left_used(g.n_left + 1, 0);
  std::vector<char> right_used(g.n_right + 1, 0);
  Cost current_cost = 0;

  auto record = [&]() {
    bool better = best.empty() || current.size() > best_size ||
                  (weighted && current.size() == best_size && current_cost < best_cost);
    if (better) {
      best.clear();
      best_size = current.size();
      best_cost = current_cost;
    } else if (current.size() != best_size || (weighted && current_cost != best_cost)) {
      return;
    }
    Matching m;
    m.edge_ids = current;
    m.cost = current_cost;
    best.push_back(std::move(m));
  };

  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == g.edges.size()) {
      record();
      return;
    }
    self(self, idx + 1);
    const BipartiteEdge& e = g.edges[idx];
    if (!left_used[e.u] && !right_used[e.v]) {
      left_used[e.u] = right_used[e.v] = 1;
      current.push_back(e.id);
      current_cost += e.cost;
      self(self, idx + 1);
      current_cost -= e.cost;
      current.pop_back();
      left_used[e.u] = right_used[e.v] = 0;
    }
  };
  rec(rec, 0);
  return best;
}

std::vector<std::vector<EdgeId>> enum_min_spanning_trees(const Multigraph& g) {
  validate(g);
  if (g.n < 1) throw InputError("graph has no vertices");
  if (g.edges.size() > 12)
    throw OracleLimitError("edge count exceeds the spanning tree enumeration guard");
  {
    Dsu d(g.n);
    for (const MultiEdge& e : g.edges)
      if (e.u != e.v) d.unite(e.u, e.v);
    if (d.component_count() != 1) throw InputError("graph is not connected");
  }

  const int m = static_cast<int>(g.edges.size());
  const int need = g.n - 1;
  std::vector<std::vector<EdgeId>> best;
  Cost best_cost = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != need) continue;
    Dsu d(g.n);
    Cost cost = 0;
    bool acyclic = true;
    std::vector<EdgeId> ids;
    for (int i = 0; i < m && acyclic; ++i) {
      if (!(mask >> i & 1u)) continue;
      const MultiEdge& e = g.edges[i];
      if (e.u == e.v || !d.unite(e.u, e.v)) {
        acyclic = false;
        break;
      }
      cost += e.cost;
      ids.push_back(i);
    }
    if (!acyclic || d.component_count() != 1) continue;
    if (best.empty() || cost < best_cost) {
      best.clear();
      best_cost = cost;
    }
    if (cost == best_cost) best.push_back(std::move(ids));
  }
  return best;
}

std::vector<int> flow_increment_oracle(const FlowNetwork& net) {
  validate(net);
  if (net.n > 12) throw OracleLimitError("vertex count exceeds the increment oracle guard");
  const long long base = max_flow(net).value;
  std::vector<int> out;
  FlowNetwork probe = net;
  for (size_t i = 0; i < probe.arcs.size(); ++i) {
    probe.arcs[i].cap += 1;
    if (max_flow(probe).value > base) out.push_back(probe.arcs[i].id);
    probe.arcs[i].cap -= 1;
  }
  return out;
}

std::vector<Category> classification_from_enumeration(
    int element_count, const std::vector<std::vector<int>>& family) {
  if (family.empty()) throw InputError("empty family");
  if (element_count < 0) throw InputError("negative element count");
  std::vector<size_t> hits(element_count, 0);
  for (const std::vector<int>& member : family)
    for (int e : member) {
      if (e < 0 || e >= element_count) throw InputError("element out of range");
      ++hits[e];
    }
  std::vector<Category> out(element_count);
  for (int e = 0; e < element_count; ++e) {
    if (hits[e] == family.size())
      out[e] = Category::Every;
    else
      out[e] = hits[e] > 0 ? Category::Some : Category::Never;
  }
  return out;
}

BipartiteClassification matching_classification_oracle(const BipartiteGraph& g, bool weighted) {
  const std::vector<Matching> optima = enum_optimal_matchings(g, weighted);
  std::vector<std::vector<int>> edge_family;
  std::vector<std::vector<int>> left_family;
  std::vector<std::vector<int>> right_family;
  for (const Matching& m : optima) {
    std::vector<int> lefts;
    std::vector<int> rights;
    for (EdgeId id : m.edge_ids) {
      lefts.push_back(g.edges[id].u - 1);
      rights.push_back(g.edges[id].v - 1);
    }
    edge_family.push_back(m.edge_ids);
    left_family.push_back(std::move(lefts));
    right_family.push_back(std::move(rights));
  }

  BipartiteClassification out;
  out.edge = classification_from_enumeration(static_cast<int>(g.edges.size()), edge_family);
  const std::vector<Category> left = classification_from_enumeration(g.n_left, left_family);
  const std::vector<Category> right = classification_from_enumeration(g.n_right, right_family);
  out.left.assign(g.n_left + 1, Category::Never);
  for (Vertex u = 1; u <= g.n_left; ++u) out.left[u] = left[u - 1];
  out.right.assign(g.n_right + 1, Category::Never);
  for (Vertex v = 1; v <= g.n_right; ++v) out.right[v] = right[v - 1];
  return out;
}

std::vector<Category> mst_classification_oracle(const Multigraph& g) {
  return classification_from_enumeration(static_cast<int>(g.edges.size()),
                                         enum_min_spanning_trees(g));
}

OracleReport compare(const std::vector<Category>& expected, const std::vector<Category>& actual,
                     const std::string& element_prefix) {
  if (expected.size() != actual.size()) throw InputError("classification sizes differ");
  OracleReport rep;
  for (size_t i = 0; i < expected.size(); ++i)
    if (expected[i] != actual[i])
      rep.mismatches.push_back(
          {element_prefix + std::to_string(i), to_string(expected[i]), to_string(actual[i])});
  return rep;
}

OracleReport compare(const BipartiteClassification& expected,
                     const BipartiteClassification& actual) {
  OracleReport rep;
  auto merge = [&rep](OracleReport part) {
    rep.mismatches.insert(rep.mismatches.end(), part.mismatches.begin(), part.mismatches.end());
  };
  merge(compare(expected.edge, actual.edge, "edge "));
  merge(compare(expected.left, actual.left, "left vertex "));
  merge(compare(expected.right, actual.right, "right vertex "));
  return rep;
}

OracleReport compare_id_sets(const std::vector<int>& expected, const std::vector<int>& actual,
                             int element_count, const std::string& element_prefix) {
  std::vector<char> in_expected(element_count, 0);
  std::vector<char> in_actual(element_count, 0);
  auto fill = [element_count](std::vector<char>& mask, const std::vector<int>& ids) {
    for (int e : ids) {
      if (e < 0 || e >= element_count) throw InputError("element out of range");
      mask[e] = 1;
    }
  };
  fill(in_expected, expected);
  fill(in_actual, actual);
  OracleReport rep;
  for (int i = 0; i < element_count; ++i)
    if (in_expected[i] != in_actual[i])
      rep.mismatches.push_back({element_prefix + std::to_string(i),
                                in_expected[i] ? "present" : "absent",
                                in_actual[i] ? "present" : "absent"});
  return rep;
}

}  // namespace netclass
