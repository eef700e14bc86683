#include "netclass/flow.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "netclass/graph.hpp"
#include "netclass/reachability.hpp"

namespace netclass {

void validate(const FlowNetwork& net) {
  if (net.n < 1) throw InputError("network has no vertices");
  auto check = [&net](Vertex x, const char* what) {
    if (x < 1 || x > net.n)
      throw InputError(std::string(what) + " vertex " + std::to_string(x) +
                       " out of range 1.." + std::to_string(net.n));
  };
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    const FlowArc& a = net.arcs[i];
    if (a.id != static_cast<int>(i)) throw InputError("arc ids must be 0..m-1 in order");
    check(a.u, "arc");
    check(a.v, "arc");
    if (a.cap < 0) throw InputError("negative capacity");
  }
  if (net.sources.empty()) throw InputError("no source vertices");
  if (net.sinks.empty()) throw InputError("no sink vertices");
  std::vector<char> is_source(net.n + 1, 0);
  for (Vertex s : net.sources) {
    check(s, "source");
    is_source[s] = 1;
  }
  for (Vertex t : net.sinks) {
    check(t, "sink");
    if (is_source[t]) throw InputError("vertex " + std::to_string(t) + " is both source and sink");
  }
}

namespace {

struct Dinic {
  struct RArc {
    int to;
    long long cap;  // residual capacity; twin lives at index ^ 1
  };
  std::vector<RArc> arcs;
  std::vector<std::vector<int>> adj;
  std::vector<int> level;
  std::vector<size_t> it;
  int n;

  explicit Dinic(int n) : adj(n + 1), level(n + 1), it(n + 1), n(n) {}

  int add(int u, int v, long long cap, long long back_cap) {
    int id = static_cast<int>(arcs.size());
    arcs.push_back({v, cap});
    adj[u].push_back(id);
    arcs.push_back({u, back_cap});
    adj[v].push_back(id + 1);
    return id;
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::vector<int> queue{s};
    level[s] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int id : adj[v]) {
        if (arcs[id].cap > 0 && level[arcs[id].to] == -1) {
          level[arcs[id].to] = level[v] + 1;
          queue.push_back(arcs[id].to);
        }
      }
    }
    return level[t] != -1;
  }

  long long dfs(int v, int t, long long limit) {
    if (v == t) return limit;
    for (size_t& i = it[v]; i < adj[v].size(); ++i) {
      int id = adj[v][i];
      int w = arcs[id].to;
      if (arcs[id].cap <= 0 || level[w] != level[v] + 1) continue;
      long long pushed = dfs(w, t, std::min(limit, arcs[id].cap));
      if (pushed > 0) {
        arcs[id].cap -= pushed;
        arcs[id ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  long long run(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      std::fill(it.begin(), it.end(), 0);
      while (long long pushed = dfs(s, t, std::numeric_limits<long long>::max()))
        total += pushed;
    }
    return total;
  }
};

FlowAssignment solve(const FlowNetwork& net) {
  validate(net);
  const int super_source = net.n + 1;
  const int super_sink = net.n + 2;
  Dinic dinic(net.n + 2);

  long long virtual_cap = 1;
  for (const FlowArc& a : net.arcs) virtual_cap += a.cap;

  std::vector<int> base(net.arcs.size());
  for (const FlowArc& a : net.arcs)
    base[a.id] = dinic.add(a.u, a.v, a.cap, net.directed ? 0 : a.cap);
  for (Vertex s : net.sources) dinic.add(super_source, s, virtual_cap, 0);
  for (Vertex t : net.sinks) dinic.add(t, super_sink, virtual_cap, 0);

  FlowAssignment out;
  out.value = dinic.run(super_source, super_sink);
  out.flow.resize(net.arcs.size());
  for (const FlowArc& a : net.arcs) {
    long long fwd = dinic.arcs[base[a.id]].cap;
    long long bwd = dinic.arcs[base[a.id] ^ 1].cap;
    // Directed: flow used = cap - residual. Undirected: the pair starts at
    // (cap, cap), so the net flow along (u,v) is half the skew.
    out.flow[a.id] = net.directed ? a.cap - fwd : (bwd - fwd) / 2;
  }
  return out;
}

std::vector<int> sorted_unique(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace

FlowAssignment max_flow(const FlowNetwork& net) { return solve(net); }

bool check_flow(const FlowNetwork& net, const FlowAssignment& fa) {
  validate(net);
  if (fa.flow.size() != net.arcs.size()) return false;
  std::vector<long long> balance(net.n + 1, 0);  // outflow minus inflow
  for (const FlowArc& a : net.arcs) {
    long long f = fa.flow[a.id];
    if (net.directed) {
      if (f < 0 || f > a.cap) return false;
    } else {
      if (f < -a.cap || f > a.cap) return false;
    }
    balance[a.u] += f;
    balance[a.v] -= f;
  }
  std::vector<char> role(net.n + 1, 0);
  for (Vertex s : net.sources) role[s] = 1;
  for (Vertex t : net.sinks) role[t] = 2;
  long long out_of_sources = 0;
  long long into_sinks = 0;
  for (Vertex v = 1; v <= net.n; ++v) {
    if (role[v] == 1)
      out_of_sources += balance[v];
    else if (role[v] == 2)
      into_sinks -= balance[v];
    else if (balance[v] != 0)
      return false;
  }
  return out_of_sources == fa.value && into_sinks == fa.value;
}

namespace {

// Shared criterion engine. Arcs are probed per orientation: a directed arc
// only as written, an undirected edge both ways.
struct Orientation {
  Vertex u, v;
  long long flow;  // along this orientation
  long long cap;
  int id;          // input arc id
};

std::vector<int> critical_ids(const FlowNetwork& net, CriticalMode mode,
                              const std::vector<Orientation>& probes) {
  // Traversal digraph: one arc per orientation of every input arc, id equal
  // to its probe index.
  Digraph d;
  d.n = net.n;
  for (size_t i = 0; i < probes.size(); ++i)
    d.arcs.push_back({probes[i].u, probes[i].v, 0, static_cast<int>(i), probes[i].id});

  std::vector<char> from_sources;
  std::vector<char> to_sinks;
  if (mode == CriticalMode::Paper) {
    // Only underfull arcs, walked in their own direction.
    ArcFilter open = [&probes](const Arc& a) { return probes[a.id].flow < probes[a.id].cap; };
    from_sources = reachable(d, net.sources, open, Direction::Forward);
    to_sinks = reachable(d, net.sinks, open, Direction::Reverse);
  } else {
    // Residual graph: forward arcs with f < cap plus reversed arcs with
    // f > 0. Realized by adding the reversal of every orientation.
    Digraph r = d;
    const int base_count = static_cast<int>(r.arcs.size());
    for (int i = 0; i < base_count; ++i) {
      const Arc& a = d.arcs[i];
      r.arcs.push_back({a.to, a.from, 0, base_count + i, a.origin});
    }
    ArcFilter residual_open = [&probes, base_count](const Arc& a) {
      if (a.id < base_count) return probes[a.id].flow < probes[a.id].cap;
      return probes[a.id - base_count].flow > 0;
    };
    from_sources = reachable(r, net.sources, residual_open, Direction::Forward);
    to_sinks = reachable(r, net.sinks, residual_open, Direction::Reverse);
  }

  std::vector<int> out;
  for (const Orientation& p : probes) {
    if (p.flow != p.cap) continue;
    if (mode == CriticalMode::Paper) {
      if (from_sources[p.u] && !from_sources[p.v] && to_sinks[p.v] && !to_sinks[p.u])
        out.push_back(p.id);
    } else {
      if (from_sources[p.u] && to_sinks[p.v]) out.push_back(p.id);
    }
  }
  return sorted_unique(out);
}

}  // namespace

std::vector<int> upward_critical(const FlowNetwork& net, CriticalMode mode) {
  if (!net.directed)
    throw InputError("network is undirected; use the undirected classification");
  FlowAssignment sol = solve(net);
  std::vector<Orientation> probes;
  probes.reserve(net.arcs.size());
  for (const FlowArc& a : net.arcs)
    probes.push_back({a.u, a.v, sol.flow[a.id], a.cap, a.id});
  return critical_ids(net, mode, probes);
}

std::vector<int> upward_critical_undirected(const FlowNetwork& net, CriticalMode mode) {
  if (net.directed)
    throw InputError("network is directed; use the directed classification");
  FlowAssignment sol = solve(net);
  std::vector<Orientation> probes;
  probes.reserve(2 * net.arcs.size());
  for (const FlowArc& a : net.arcs) {
    long long f = sol.flow[a.id];
    probes.push_back({a.u, a.v, f, a.cap, a.id});
    probes.push_back({a.v, a.u, -f, a.cap, a.id});
  }
  return critical_ids(net, mode, probes);
}

}  // namespace netclass
