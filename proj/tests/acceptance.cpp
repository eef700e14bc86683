// Acceptance gate. Runs the seven release criteria and prints one line per
// criterion; exits nonzero if any fail. Arguments: <cli-binary> <data-dir>
// <golden-dir>.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "netclass/flow.hpp"
#include "netclass/geometry.hpp"
#include "netclass/io.hpp"
#include "netclass/matching_classify.hpp"
#include "netclass/mst_classify.hpp"
#include "netclass/oracle.hpp"

using namespace netclass;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& title, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << title;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

using Rng = std::mt19937;

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double pick_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

BipartiteGraph random_bipartite(Rng& rng, int max_side, int max_edges, bool with_costs,
                                int max_cost) {
  BipartiteGraph g;
  g.n_left = pick(rng, 1, max_side);
  g.n_right = pick(rng, 1, max_side);
  g.has_costs = with_costs;
  int m = pick(rng, 0, max_edges);
  for (int i = 0; i < m; ++i) {
    g.edges.push_back({pick(rng, 1, g.n_left), pick(rng, 1, g.n_right),
                       with_costs ? pick(rng, 0, max_cost) : 0, i});
  }
  return g;
}

Multigraph random_connected_multigraph(Rng& rng, int max_n, int max_edges, int min_cost,
                                       int max_cost) {
  Multigraph g;
  g.n = pick(rng, 1, std::min(max_n, max_edges + 1));
  g.has_costs = true;
  std::vector<MultiEdge> edges;
  for (Vertex v = 2; v <= g.n; ++v) edges.push_back({pick(rng, 1, v - 1), v, 0, 0});
  int extra = pick(rng, 0, max_edges - static_cast<int>(edges.size()));
  for (int i = 0; i < extra; ++i) edges.push_back({pick(rng, 1, g.n), pick(rng, 1, g.n), 0, 0});
  std::shuffle(edges.begin(), edges.end(), rng);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    edges[i].id = i;
    edges[i].cost = pick(rng, min_cost, max_cost);
  }
  g.edges = std::move(edges);
  return g;
}

FlowNetwork random_flow_network(Rng& rng, int max_n, int max_arcs, int max_cap, bool directed) {
  FlowNetwork net;
  net.n = pick(rng, 2, max_n);
  net.directed = directed;
  net.sources = {1};
  net.sinks = {net.n};
  if (net.n >= 4 && pick(rng, 0, 3) == 0) net.sources.push_back(2);
  if (net.n >= 4 && pick(rng, 0, 3) == 0) net.sinks.push_back(net.n - 1);
  int m = pick(rng, 1, max_arcs);
  for (int i = 0; i < m; ++i) {
    FlowArc a;
    a.u = pick(rng, 1, net.n);
    do {
      a.v = pick(rng, 1, net.n);
    } while (a.v == a.u);
    a.cap = pick(rng, 1, max_cap);
    a.id = i;
    net.arcs.push_back(a);
  }
  return net;
}

void criterion1() {
  auto start = Clock::now();
  int mismatches = 0, instances = 0;

  // every simple bipartite graph on 3+3 vertices with at most 6 edges
  for (int mask = 0; mask < 512; ++mask) {
    if (__builtin_popcount(mask) > 6) continue;
    BipartiteGraph g;
    g.n_left = 3;
    g.n_right = 3;
    int id = 0;
    for (int bit = 0; bit < 9; ++bit) {
      if (mask & (1 << bit)) g.edges.push_back({bit / 3 + 1, bit % 3 + 1, 0, id++});
    }
    ++instances;
    if (!compare(matching_classification_oracle(g, false), classify_unweighted(g)).ok()) {
      ++mismatches;
    }
  }
  int exhaustive = instances;

  Rng rng(101);
  for (int iter = 0; iter < 500; ++iter) {
    BipartiteGraph g = random_bipartite(rng, 4, 8, false, 0);
    ++instances;
    if (!compare(matching_classification_oracle(g, false), classify_unweighted(g)).ok()) {
      ++mismatches;
    }
  }

  double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << exhaustive << " exhaustive + 500 random instances, " << mismatches
         << " mismatches, " << elapsed << " s";
  report(1, "unweighted classification equals the enumeration oracle",
         mismatches == 0 && elapsed < 60.0, detail.str());
}

void criterion2() {
  Rng rng(102);
  int mismatches = 0;
  for (int iter = 0; iter < 500; ++iter) {
    BipartiteGraph g = random_bipartite(rng, 4, 8, true, 3);
    if (!compare(matching_classification_oracle(g, true), classify_weighted(g)).ok()) {
      ++mismatches;
    }
  }
  report(2, "weighted classification equals the enumeration oracle", mismatches == 0,
         "500 random instances, " + std::to_string(mismatches) + " mismatches");
}

void criterion3() {
  Rng rng(103);
  int mismatches = 0, uniform_gaps = 0;
  for (int iter = 0; iter < 500; ++iter) {
    Multigraph g = random_connected_multigraph(rng, 6, 10, 1, 4);
    if (!compare(mst_classification_oracle(g), classify_mst_edges(g), "edge ").ok()) {
      ++mismatches;
    }
    Multigraph uniform = g;
    for (auto& e : uniform.edges) e.cost = 2;
    Multigraph bare = uniform;
    bare.has_costs = false;
    for (auto& e : bare.edges) e.cost = 0;
    if (classify_mst_edges(uniform) != classify_spanning_tree_edges(bare)) ++uniform_gaps;
  }
  report(3, "mst classification equals the enumeration oracle",
         mismatches == 0 && uniform_gaps == 0,
         "500 random instances, " + std::to_string(mismatches) + " mismatches, " +
             std::to_string(uniform_gaps) + " uniform-cost disagreements");
}

void criterion4() {
  Rng rng(104);
  int residual_gaps = 0, paper_unsound = 0, paper_exact = 0, total = 0;
  auto probe = [&](const FlowNetwork& net) {
    auto oracle = flow_increment_oracle(net);
    auto residual = net.directed ? upward_critical(net, CriticalMode::Residual)
                                 : upward_critical_undirected(net, CriticalMode::Residual);
    auto paper = net.directed ? upward_critical(net, CriticalMode::Paper)
                              : upward_critical_undirected(net, CriticalMode::Paper);
    ++total;
    if (residual != oracle) ++residual_gaps;
    if (!std::includes(oracle.begin(), oracle.end(), paper.begin(), paper.end())) {
      ++paper_unsound;
    }
    if (paper == oracle) ++paper_exact;
  };
  for (int iter = 0; iter < 500; ++iter) probe(random_flow_network(rng, 7, 14, 4, true));
  for (int iter = 0; iter < 200; ++iter) probe(random_flow_network(rng, 6, 10, 3, false));

  // two bottleneck arcs on disjoint routes; both must be reported
  FlowNetwork named;
  named.n = 6;
  named.sources = {1};
  named.sinks = {6};
  named.arcs = {{1, 2, 2, 0}, {2, 3, 2, 1}, {3, 4, 1, 2}, {3, 5, 1, 3},
                {4, 6, 2, 4}, {5, 6, 1, 5}, {1, 5, 1, 6}};
  bool named_ok = flow_increment_oracle(named) == std::vector<int>{2, 5} &&
                  upward_critical(named, CriticalMode::Residual) == std::vector<int>{2, 5};
  probe(named);

  std::ostringstream detail;
  detail << total << " instances, " << residual_gaps << " residual gaps, " << paper_unsound
         << " paper soundness violations, paper exact on " << paper_exact << "/" << total;
  report(4, "residual criterion equals the increment oracle, paper stays sound",
         residual_gaps == 0 && paper_unsound == 0 && named_ok, detail.str());
}

void criterion5() {
  Rng rng(105);
  std::ostringstream detail;
  bool ok = true;

  {
    BipartiteGraph g;
    g.n_left = 150;
    g.n_right = 150;
    g.has_costs = true;
    int id = 0;
    for (Vertex u = 1; u <= 150; ++u) {
      for (Vertex v = 1; v <= 150; ++v) g.edges.push_back({u, v, pick(rng, 0, 9), id++});
    }
    auto start = Clock::now();
    classify_weighted(g);
    double t = seconds_since(start);
    ok = ok && t <= 30.0;
    detail << "complete 150x150 weighted in " << t << " s";
  }
  {
    Multigraph g;
    g.n = 10000;
    g.has_costs = true;
    std::vector<MultiEdge> edges;
    for (Vertex v = 2; v <= g.n; ++v) edges.push_back({pick(rng, 1, v - 1), v, 0, 0});
    while (edges.size() < 100000) edges.push_back({pick(rng, 1, g.n), pick(rng, 1, g.n), 0, 0});
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      edges[i].id = i;
      edges[i].cost = pick(rng, 1, 100);
    }
    g.edges = std::move(edges);
    auto start = Clock::now();
    classify_mst_edges(g);
    double t = seconds_since(start);
    ok = ok && t <= 10.0;
    detail << ", mst 1e4/1e5 in " << t << " s";
  }
  {
    FlowNetwork net;
    net.n = 1000;
    net.sources = {1};
    net.sinks = {1000};
    std::vector<FlowArc> arcs;
    for (Vertex v = 2; v <= net.n; ++v) arcs.push_back({pick(rng, 1, v - 1), v, 1, 0});
    while (arcs.size() < 10000) {
      Vertex u = pick(rng, 1, net.n);
      Vertex v = pick(rng, 1, net.n);
      if (u != v) arcs.push_back({u, v, 1, 0});
    }
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) arcs[i].id = i;
    net.arcs = std::move(arcs);
    auto start = Clock::now();
    upward_critical(net, CriticalMode::Residual);
    double t = seconds_since(start);
    ok = ok && t <= 10.0;
    detail << ", flow 1e3/1e4 in " << t << " s";
  }
  report(5, "large instances finish inside their budgets", ok, detail.str());
}

void criterion6() {
  Rng rng(106);
  bool ok = true;
  std::ostringstream detail;

  int balanced_bad = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    double w1 = pick_real(rng, 0.1, 10);
    double y = pick_real(rng, 0.1, 10);
    double x = pick_real(rng, 0.1, 10);
    // w1 + w2 must land exactly on 2*y in floating point
    double s = 2 * y;
    double w1top = y + pick_real(rng, 0, y * 0.9);
    std::vector<std::vector<double>> cases = {
        {w1, y, y}, {x, x, y, y}, {w1top, s - w1top, y, y}};
    for (const auto& w : cases) {
      auto pts = balanced_arrangement({w});
      if (!pts || !balanced_check(*pts, w, 1e-6)) ++balanced_bad;
    }
  }
  for (int n = 5; n <= 8; ++n) {
    std::vector<double> w(n, 1.0);
    if (balanced_arrangement({w})) ++balanced_bad;
  }
  if (balanced_arrangement({{1, 2, 3, 3}})) ++balanced_bad;
  ok = ok && balanced_bad == 0;
  detail << "balanced: " << balanced_bad << " failures";

  double worst_poly = 0;
  int poly_none = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    int n = pick(rng, 3, 50);
    std::vector<Point> vertices;
    std::vector<double> t;
    for (int i = 0; i < n; ++i) {
      vertices.push_back({pick_real(rng, -100, 100), pick_real(rng, -100, 100)});
      t.push_back(pick(rng, 0, 4) == 0 ? 0.0 : pick_real(rng, 0.1, 0.9));
    }
    PolygonInstance inst{polygon_forward(vertices, t), t};
    auto rec = polygon_reconstruct(inst);
    if (rec.x_status == AxisStatus::None || rec.y_status == AxisStatus::None) {
      ++poly_none;
      continue;
    }
    const std::vector<Point>& reference =
        (rec.x_status == AxisStatus::Unique && rec.y_status == AxisStatus::Unique)
            ? vertices
            : inst.points;
    const std::vector<Point>& produced =
        (rec.x_status == AxisStatus::Unique && rec.y_status == AxisStatus::Unique)
            ? rec.vertices
            : polygon_forward(rec.vertices, t);
    double scale = 1;
    for (const Point& p : reference) scale = std::max({scale, std::fabs(p.x), std::fabs(p.y)});
    for (size_t i = 0; i < reference.size(); ++i) {
      worst_poly = std::max(worst_poly, std::fabs(produced[i].x - reference[i].x) / scale);
      worst_poly = std::max(worst_poly, std::fabs(produced[i].y - reference[i].y) / scale);
    }
  }
  ok = ok && worst_poly <= 1e-6 && poly_none == 0;
  detail << "; polygon worst rel err " << worst_poly << ", " << poly_none << " spurious NONE";

  double worst_tri = 0;
  int tri_bad = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    double a = pick_real(rng, 0.2, 5);
    Point A{pick_real(rng, -5, 5), pick_real(rng, 0.2, 5)};
    TriangleInstance inst{std::hypot(A.x - 2 * a, A.y), std::hypot(A.x, A.y),
                          std::hypot(A.x - a, A.y)};
    auto closed = triangle_from_median_closed(inst);
    auto searched = triangle_from_median_search(inst);
    if (!closed || !searched) {
      ++tri_bad;
      continue;
    }
    double scale = std::max({1.0, inst.lb, inst.lc, inst.lm});
    std::vector<Point> cs = {closed->a, closed->b, closed->c};
    std::vector<Point> ss = {searched->a, searched->b, searched->c};
    for (int i = 0; i < 3; ++i) {
      worst_tri = std::max(worst_tri, std::fabs(cs[i].x - ss[i].x) / scale);
      worst_tri = std::max(worst_tri, std::fabs(cs[i].y - ss[i].y) / scale);
    }
  }
  for (int iter = 0; iter < 200; ++iter) {
    TriangleInstance inst{pick_real(rng, 0.1, 5), pick_real(rng, 0.1, 5),
                          pick_real(rng, 0.1, 5)};
    bool c = triangle_from_median_closed(inst).has_value();
    bool s = triangle_from_median_search(inst).has_value();
    if (c != s) ++tri_bad;
  }
  ok = ok && worst_tri <= 1e-5 && tri_bad == 0;
  detail << "; triangle worst gap " << worst_tri << ", " << tri_bad << " disagreements";

  report(6, "geometric constructions hit their tolerances", ok, detail.str());
}

struct CliCase {
  std::string name;
  std::string args;  // appended after the binary path
  std::string golden;  // golden stdout file name, empty = expect empty stdout
  int exit_code = 0;
};

std::string slurp(const std::string& path, bool& found) {
  std::ifstream in(path, std::ios::binary);
  found = static_cast<bool>(in);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void criterion7(const std::string& cli, const std::string& data_dir,
                const std::string& golden_dir) {
  std::vector<CliCase> cases = {
      {"chain unweighted", "classify-matching " + data_dir + "/bip_chain.txt",
       "bip_chain.tsv", 0},
      {"k22 weighted", "classify-matching --weighted " + data_dir + "/bip_k22.txt",
       "bip_k22.tsv", 0},
      {"k22 weighted json", "classify-matching --weighted --json " + data_dir + "/bip_k22.txt",
       "bip_k22.json", 0},
      {"k22 weighted verified",
       "classify-matching --weighted --verify " + data_dir + "/bip_k22.txt", "bip_k22.tsv", 0},
      {"mst triangle", "classify-mst " + data_dir + "/mst_triangle.txt", "mst_triangle.tsv", 0},
      {"mst plain", "classify-mst --no-costs " + data_dir + "/mst_plain.txt", "mst_plain.tsv",
       0},
      {"bottleneck residual", "critical-edges " + data_dir + "/flow_bottleneck.txt",
       "flow_bottleneck.tsv", 0},
      {"bottleneck residual verified",
       "critical-edges --verify " + data_dir + "/flow_bottleneck.txt", "flow_bottleneck.tsv",
       0},
      {"paper gap output", "critical-edges --mode paper " + data_dir + "/flow_paper_gap.txt",
       "flow_paper_gap.tsv", 0},
      {"paper gap verify", "critical-edges --mode paper --verify " + data_dir +
                               "/flow_paper_gap.txt", "", 3},
      {"balanced three", "balanced-points --weights 1,1,1", "balanced3.tsv", 0},
      {"balanced five", "balanced-points --weights 1,1,1,1,1", "no_solution.txt", 1},
      {"polygon midpoints", "reconstruct-polygon " + data_dir + "/poly_triangle.txt",
       "poly_triangle.tsv", 0},
      {"polygon inconsistent", "reconstruct-polygon " + data_dir + "/poly_none.txt",
       "no_solution.txt", 1},
      {"triangle median", "triangle-median --lb 2 --lc 2 --lm 1.7320508", "triangle.tsv", 0},
      {"triangle impossible", "triangle-median --lb 1 --lc 1 --lm 2", "no_solution.txt", 1},
      {"malformed file", "classify-matching " + data_dir + "/bad_edge.txt", "", 2},
  };

  int bad = 0;
  std::string why;
  for (const CliCase& c : cases) {
    std::string out_path = "acceptance_stdout.tmp";
    std::string cmd = cli + " " + c.args + " > " + out_path + " 2> acceptance_stderr.tmp";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    bool found = true;
    std::string got = slurp(out_path, found);
    std::string want;
    if (!c.golden.empty()) {
      bool gfound = true;
      want = slurp(golden_dir + "/" + c.golden, gfound);
      if (!gfound) {
        ++bad;
        why = c.name + ": missing golden file";
        continue;
      }
    }
    if (code != c.exit_code) {
      ++bad;
      why = c.name + ": exit " + std::to_string(code) + " wanted " +
            std::to_string(c.exit_code);
    } else if (got != want) {
      ++bad;
      why = c.name + ": stdout differs from golden";
    }
  }
  std::remove("acceptance_stdout.tmp");
  std::remove("acceptance_stderr.tmp");

  // instance files survive a parse, serialize, parse cycle
  int roundtrip_bad = 0;
  {
    std::ifstream f1(data_dir + "/bip_chain.txt");
    BipartiteGraph a = read_bipartite(f1, false);
    std::istringstream back(write_bipartite(a));
    BipartiteGraph b = read_bipartite(back, false);
    if (write_bipartite(b) != write_bipartite(a)) ++roundtrip_bad;
  }
  {
    std::ifstream f(data_dir + "/bip_k22.txt");
    BipartiteGraph a = read_bipartite(f, true);
    std::istringstream back(write_bipartite(a));
    if (write_bipartite(read_bipartite(back, true)) != write_bipartite(a)) ++roundtrip_bad;
  }
  {
    std::ifstream f(data_dir + "/mst_triangle.txt");
    Multigraph a = read_multigraph(f, true);
    std::istringstream back(write_multigraph(a));
    if (write_multigraph(read_multigraph(back, true)) != write_multigraph(a)) ++roundtrip_bad;
  }
  {
    std::ifstream f(data_dir + "/flow_bottleneck.txt");
    FlowNetwork a = read_flow_network(f, true);
    std::istringstream back(write_flow_network(a));
    if (write_flow_network(read_flow_network(back, true)) != write_flow_network(a)) {
      ++roundtrip_bad;
    }
  }
  {
    std::ifstream f(data_dir + "/poly_triangle.txt");
    PolygonInstance a = read_polygon(f);
    std::istringstream back(write_polygon(a));
    if (write_polygon(read_polygon(back)) != write_polygon(a)) ++roundtrip_bad;
  }

  std::ostringstream detail;
  detail << cases.size() << " cli cases";
  if (bad > 0) detail << ", first failure: " << why;
  if (roundtrip_bad > 0) detail << ", " << roundtrip_bad << " round-trip failures";
  report(7, "cli output matches the golden files byte for byte",
         bad == 0 && roundtrip_bad == 0, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: " << argv[0] << " <cli-binary> <data-dir> <golden-dir>\n";
    return 2;
  }
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7(argv[1], argv[2], argv[3]);
  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
