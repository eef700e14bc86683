#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "netclass/flow.hpp"
#include "netclass/geometry.hpp"
#include "netclass/io.hpp"
#include "netclass/matching_classify.hpp"
#include "netclass/mst_classify.hpp"
#include "netclass/oracle.hpp"

namespace {

using nlohmann::json;
using namespace netclass;

constexpr int kExitOk = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerify = 3;

double drop_negative_zero(double v) { return v == 0.0 ? 0.0 : v; }

std::string fmt10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", drop_negative_zero(v));
  return buf;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

int report_mismatches(const OracleReport& report) {
  for (const Mismatch& m : report.mismatches) {
    std::cerr << "mismatch: " << m.element << ": expected " << m.expected << ", got "
              << m.actual << '\n';
  }
  return kExitVerify;
}

void emit_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int emit_no_solution(bool as_json, json extra = json::object()) {
  if (as_json) {
    extra["status"] = "NO_SOLUTION";
    extra["vertices"] = json::array();
    emit_json(extra);
  } else {
    std::cout << "NO SOLUTION\n";
  }
  return kExitNoSolution;
}

json points_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (size_t i = 0; i < pts.size(); ++i) {
    arr.push_back({{"i", static_cast<int>(i) + 1},
                   {"x", drop_negative_zero(pts[i].x)},
                   {"y", drop_negative_zero(pts[i].y)}});
  }
  return arr;
}

void emit_points_tsv(const std::vector<Point>& pts) {
  for (size_t i = 0; i < pts.size(); ++i) {
    std::cout << "vertex\t" << i + 1 << '\t' << fmt10(pts[i].x) << '\t' << fmt10(pts[i].y)
              << '\n';
  }
}

int run_classify_matching(const std::string& path, bool weighted, bool as_json, bool verify) {
  std::ifstream in = open_input(path);
  BipartiteGraph g = read_bipartite(in, weighted);
  BipartiteClassification c = weighted ? classify_weighted(g) : classify_unweighted(g);
  if (verify) {
    OracleReport report = compare(matching_classification_oracle(g, weighted), c);
    if (!report.ok()) return report_mismatches(report);
  }
  if (as_json) {
    json j;
    j["edges"] = json::array();
    for (const BipartiteEdge& e : g.edges) {
      j["edges"].push_back(
          {{"category", to_string(c.edge[e.id])}, {"id", e.id}, {"u", e.u}, {"v", e.v}});
    }
    j["vertices"] = json::array();
    for (Vertex u = 1; u <= g.n_left; ++u) {
      j["vertices"].push_back({{"category", to_string(c.left[u])}, {"index", u}, {"side", "L"}});
    }
    for (Vertex v = 1; v <= g.n_right; ++v) {
      j["vertices"].push_back({{"category", to_string(c.right[v])}, {"index", v}, {"side", "R"}});
    }
    emit_json(j);
  } else {
    for (const BipartiteEdge& e : g.edges) {
      std::cout << "edge\t" << e.id << '\t' << e.u << '\t' << e.v << '\t'
                << to_string(c.edge[e.id]) << '\n';
    }
    for (Vertex u = 1; u <= g.n_left; ++u) {
      std::cout << "vertex\tL" << u << '\t' << to_string(c.left[u]) << '\n';
    }
    for (Vertex v = 1; v <= g.n_right; ++v) {
      std::cout << "vertex\tR" << v << '\t' << to_string(c.right[v]) << '\n';
    }
  }
  return kExitOk;
}

int run_classify_mst(const std::string& path, bool no_costs, bool as_json, bool verify) {
  std::ifstream in = open_input(path);
  Multigraph g = read_multigraph(in, !no_costs);
  std::vector<Category> c = no_costs ? classify_spanning_tree_edges(g) : classify_mst_edges(g);
  if (verify) {
    OracleReport report = compare(mst_classification_oracle(g), c, "edge ");
    if (!report.ok()) return report_mismatches(report);
  }
  if (as_json) {
    json j;
    j["edges"] = json::array();
    for (const MultiEdge& e : g.edges) {
      j["edges"].push_back(
          {{"category", to_string(c[e.id])}, {"id", e.id}, {"u", e.u}, {"v", e.v}});
    }
    j["vertices"] = json::array();
    emit_json(j);
  } else {
    for (const MultiEdge& e : g.edges) {
      std::cout << "edge\t" << e.id << '\t' << e.u << '\t' << e.v << '\t' << to_string(c[e.id])
                << '\n';
    }
  }
  return kExitOk;
}

int run_critical_edges(const std::string& path, const std::string& mode, bool undirected,
                       bool as_json, bool verify) {
  std::ifstream in = open_input(path);
  FlowNetwork net = read_flow_network(in, !undirected);
  CriticalMode cm = mode == "paper" ? CriticalMode::Paper : CriticalMode::Residual;
  std::vector<int> ids =
      net.directed ? upward_critical(net, cm) : upward_critical_undirected(net, cm);
  if (verify) {
    std::vector<int> oracle = flow_increment_oracle(net);
    OracleReport report =
        compare_id_sets(oracle, ids, static_cast<int>(net.arcs.size()), "arc ");
    if (!report.ok()) return report_mismatches(report);
  }
  if (as_json) {
    json j;
    j["edges"] = json::array();
    for (int id : ids) {
      j["edges"].push_back({{"id", id}, {"u", net.arcs[id].u}, {"v", net.arcs[id].v}});
    }
    emit_json(j);
  } else {
    for (int id : ids) {
      std::cout << "critical\t" << id << '\t' << net.arcs[id].u << '\t' << net.arcs[id].v
                << '\n';
    }
  }
  return kExitOk;
}

std::vector<double> parse_weights(const std::string& s) {
  if (s.empty() || s.back() == ',') throw InputError("malformed weight list '" + s + "'");
  std::vector<double> out;
  std::istringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (tok.empty() || end != begin + tok.size()) {
      throw InputError("malformed weight '" + tok + "'");
    }
    out.push_back(v);
  }
  return out;
}

int run_balanced_points(const std::string& weights_arg, bool as_json) {
  BalancedInstance inst{parse_weights(weights_arg)};
  std::optional<std::vector<Point>> points = balanced_arrangement(inst);
  if (!points) return emit_no_solution(as_json);
  if (as_json) {
    json j;
    j["status"] = "OK";
    j["vertices"] = points_json(*points);
    emit_json(j);
  } else {
    emit_points_tsv(*points);
  }
  return kExitOk;
}

int run_reconstruct_polygon(const std::string& path, bool as_json) {
  std::ifstream in = open_input(path);
  PolygonInstance inst = read_polygon(in);
  PolygonReconstruction rec = polygon_reconstruct(inst);
  if (!rec.note.empty()) std::cerr << "note: " << rec.note << '\n';
  json extra = {{"x_status", to_string(rec.x_status)}, {"y_status", to_string(rec.y_status)}};
  if (rec.x_status == AxisStatus::None || rec.y_status == AxisStatus::None) {
    return emit_no_solution(as_json, extra);
  }
  if (as_json) {
    json j = extra;
    j["status"] = "OK";
    j["vertices"] = points_json(rec.vertices);
    emit_json(j);
  } else {
    if (rec.x_status == AxisStatus::Free) std::cout << "free\tx\n";
    if (rec.y_status == AxisStatus::Free) std::cout << "free\ty\n";
    emit_points_tsv(rec.vertices);
  }
  return kExitOk;
}

int run_triangle_median(double lb, double lc, double lm, const std::string& method, double leps,
                        double ueps, bool as_json) {
  TriangleInstance inst{lb, lc, lm};
  std::optional<Triangle> tri = method == "search"
                                    ? triangle_from_median_search(inst, leps, ueps)
                                    : triangle_from_median_closed(inst);
  if (!tri) return emit_no_solution(as_json);
  std::vector<Point> pts = {tri->a, tri->b, tri->c};
  if (as_json) {
    json j;
    j["status"] = tri->degenerate ? "DEGENERATE" : "OK";
    j["vertices"] = points_json(pts);
    emit_json(j);
  } else {
    if (tri->degenerate) std::cerr << "warning: degenerate triangle, zero area\n";
    emit_points_tsv(pts);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification of network elements against optimal structures, "
               "plus constrained geometric construction"};
  app.require_subcommand(1);

  std::string cm_file;
  bool cm_weighted = false, cm_json = false, cm_verify = false;
  CLI::App* cm = app.add_subcommand(
      "classify-matching", "Tag edges and vertices by membership in optimal matchings");
  cm->add_option("file", cm_file, "bipartite graph file")->required();
  cm->add_flag("--weighted", cm_weighted, "classify against minimum-cost maximum matchings");
  cm->add_flag("--json", cm_json, "JSON output");
  cm->add_flag("--verify", cm_verify, "cross-check with the enumeration oracle");

  std::string mst_file;
  bool mst_no_costs = false, mst_json = false, mst_verify = false;
  CLI::App* mst = app.add_subcommand(
      "classify-mst", "Tag edges by membership in minimum spanning trees");
  mst->add_option("file", mst_file, "weighted multigraph file")->required();
  mst->add_flag("--no-costs", mst_no_costs, "treat input as uncosted, classify by spanning trees");
  mst->add_flag("--json", mst_json, "JSON output");
  mst->add_flag("--verify", mst_verify, "cross-check with the enumeration oracle");

  std::string ce_file, ce_mode = "residual";
  bool ce_undirected = false, ce_json = false, ce_verify = false;
  CLI::App* ce = app.add_subcommand(
      "critical-edges", "Find arcs whose capacity increase raises the maximum flow");
  ce->add_option("file", ce_file, "flow network file")->required();
  ce->add_option("--mode", ce_mode, "criterion: paper or residual")
      ->check(CLI::IsMember({"paper", "residual"}));
  ce->add_flag("--undirected", ce_undirected, "treat arcs as undirected edges");
  ce->add_flag("--json", ce_json, "JSON output");
  ce->add_flag("--verify", ce_verify, "cross-check with the capacity-increment oracle");

  std::string bp_weights;
  bool bp_json = false;
  CLI::App* bp = app.add_subcommand(
      "balanced-points", "Arrange weighted points so triangle areas equal weight sums");
  bp->add_option("--weights", bp_weights, "comma-separated weights w1,...,wN")->required();
  bp->add_flag("--json", bp_json, "JSON output");

  std::string rp_file;
  bool rp_json = false;
  CLI::App* rp = app.add_subcommand(
      "reconstruct-polygon", "Recover a polygon from division points on its edges");
  rp->add_option("file", rp_file, "division point file")->required();
  rp->add_flag("--json", rp_json, "JSON output");

  double tm_lb = 0, tm_lc = 0, tm_lm = 0, tm_leps = 1e-12, tm_ueps = 1e-12;
  std::string tm_method = "closed";
  bool tm_json = false;
  CLI::App* tm = app.add_subcommand(
      "triangle-median", "Construct a triangle from two sides and the included median");
  tm->add_option("--lb", tm_lb, "length |AC|")->required();
  tm->add_option("--lc", tm_lc, "length |AB|")->required();
  tm->add_option("--lm", tm_lm, "median length |AM|")->required();
  tm->add_option("--method", tm_method, "closed or search")
      ->check(CLI::IsMember({"closed", "search"}));
  tm->add_option("--leps", tm_leps, "outer bisection tolerance");
  tm->add_option("--ueps", tm_ueps, "inner bisection tolerance");
  tm->add_flag("--json", tm_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*cm) return run_classify_matching(cm_file, cm_weighted, cm_json, cm_verify);
    if (*mst) return run_classify_mst(mst_file, mst_no_costs, mst_json, mst_verify);
    if (*ce) return run_critical_edges(ce_file, ce_mode, ce_undirected, ce_json, ce_verify);
    if (*bp) return run_balanced_points(bp_weights, bp_json);
    if (*rp) return run_reconstruct_polygon(rp_file, rp_json);
    if (*tm) {
      return run_triangle_median(tm_lb, tm_lc, tm_lm, tm_method, tm_leps, tm_ueps, tm_json);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const OracleLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
