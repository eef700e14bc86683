#include "netclass/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "netclass/decimal.hpp"

namespace netclass {

namespace {

constexpr long long kMaxVertices = 10000000;
constexpr long long kMaxRecords = 1000000;
constexpr long long kMaxCapacity = 1000000000000LL;  // 1e12

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line;
    line.number = number;
    std::string tok;
    while (ss >> tok) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

struct LineReader {
  std::vector<Line> lines;
  size_t pos = 0;

  explicit LineReader(std::istream& in) : lines(tokenize(in)) {}

  const Line& next(const std::string& what) {
    if (pos >= lines.size()) {
      throw InputError("unexpected end of input: expected " + what);
    }
    return lines[pos++];
  }

  void finish() const {
    if (pos < lines.size()) fail(lines[pos].number, "trailing content");
  }
};

long long int_field(const Line& line, size_t idx, const std::string& what) {
  try {
    return parse_integer_token(line.tokens[idx]);
  } catch (const InputError&) {
    fail(line.number, "expected integer " + what + ", got '" + line.tokens[idx] + "'");
  }
}

double double_field(const Line& line, size_t idx, const std::string& what) {
  const std::string& tok = line.tokens[idx];
  const char* begin = tok.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end != begin + tok.size() || tok.empty()) {
    fail(line.number, "expected number " + what + ", got '" + tok + "'");
  }
  return v;
}

long long count_field(const Line& line, size_t idx, const std::string& what,
                      long long max_value) {
  long long v = int_field(line, idx, what);
  if (v < 0 || v > max_value) {
    fail(line.number, what + " out of range: " + line.tokens[idx]);
  }
  return v;
}

Vertex vertex_field(const Line& line, size_t idx, const std::string& what, long long n) {
  long long v = int_field(line, idx, what);
  if (v < 1 || v > n) {
    fail(line.number, what + " out of range 1.." + std::to_string(n) + ": " +
                          line.tokens[idx]);
  }
  return static_cast<Vertex>(v);
}

// Validates each token alone so syntax errors carry a line number, then
// parses the batch for the shared scale.
ScaledDecimals costs_at_shared_scale(const std::vector<std::string>& tokens,
                                     const std::vector<int>& token_lines) {
  for (size_t i = 0; i < tokens.size(); ++i) {
    try {
      parse_decimals({tokens[i]});
    } catch (const InputError& e) {
      fail(token_lines[i], e.what());
    }
  }
  return parse_decimals(tokens);
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

BipartiteGraph read_bipartite(std::istream& in, bool weighted) {
  LineReader r(in);
  const Line& header = r.next("header 'nL nR m'");
  if (header.tokens.size() != 3) fail(header.number, "expected header 'nL nR m'");
  long long n_left = count_field(header, 0, "nL", kMaxVertices);
  long long n_right = count_field(header, 1, "nR", kMaxVertices);
  long long m = count_field(header, 2, "m", kMaxRecords);

  BipartiteGraph g;
  g.n_left = static_cast<int>(n_left);
  g.n_right = static_cast<int>(n_right);
  std::vector<std::string> cost_tokens;
  std::vector<int> cost_lines;
  size_t columns = 0;
  for (long long i = 0; i < m; ++i) {
    const Line& e = r.next("edge line 'u v" + std::string(weighted ? " cost'" : " [cost]'"));
    if (weighted && e.tokens.size() != 3) {
      fail(e.number, "expected 'u v cost'");
    }
    if (!weighted) {
      if (e.tokens.size() != 2 && e.tokens.size() != 3) {
        fail(e.number, "expected 'u v' or 'u v cost'");
      }
      if (columns == 0) columns = e.tokens.size();
      if (e.tokens.size() != columns) {
        fail(e.number, "inconsistent edge columns: cost given on some lines only");
      }
    }
    BipartiteEdge edge;
    edge.u = vertex_field(e, 0, "left endpoint", n_left);
    edge.v = vertex_field(e, 1, "right endpoint", n_right);
    edge.id = static_cast<EdgeId>(i);
    g.edges.push_back(edge);
    if (e.tokens.size() == 3) {
      cost_tokens.push_back(e.tokens[2]);
      cost_lines.push_back(e.number);
    }
  }
  r.finish();
  g.has_costs = weighted || columns == 3;
  if (g.has_costs && !cost_tokens.empty()) {
    ScaledDecimals d = costs_at_shared_scale(cost_tokens, cost_lines);
    g.cost_scale = d.scale;
    for (size_t i = 0; i < d.values.size(); ++i) {
      if (d.values[i] < 0) fail(cost_lines[i], "edge cost must be nonnegative");
      g.edges[i].cost = d.values[i];
    }
  }
  validate(g);
  return g;
}

Multigraph read_multigraph(std::istream& in, bool with_costs) {
  LineReader r(in);
  const Line& header = r.next("header 'n m'");
  if (header.tokens.size() != 2) fail(header.number, "expected header 'n m'");
  long long n = count_field(header, 0, "n", kMaxVertices);
  long long m = count_field(header, 1, "m", kMaxRecords);

  Multigraph g;
  g.n = static_cast<int>(n);
  std::vector<std::string> cost_tokens;
  std::vector<int> cost_lines;
  for (long long i = 0; i < m; ++i) {
    const Line& e = r.next(with_costs ? "edge line 'u v cost'" : "edge line 'u v'");
    if (e.tokens.size() != (with_costs ? 3u : 2u)) {
      fail(e.number, with_costs ? "expected 'u v cost'" : "expected 'u v'");
    }
    MultiEdge edge;
    edge.u = vertex_field(e, 0, "endpoint", n);
    edge.v = vertex_field(e, 1, "endpoint", n);
    edge.id = static_cast<EdgeId>(i);
    g.edges.push_back(edge);
    if (with_costs) {
      cost_tokens.push_back(e.tokens[2]);
      cost_lines.push_back(e.number);
    }
  }
  r.finish();
  g.has_costs = with_costs;
  if (with_costs && !cost_tokens.empty()) {
    ScaledDecimals d = costs_at_shared_scale(cost_tokens, cost_lines);
    g.cost_scale = d.scale;
    for (size_t i = 0; i < d.values.size(); ++i) g.edges[i].cost = d.values[i];
  }
  validate(g);
  return g;
}

FlowNetwork read_flow_network(std::istream& in, bool directed) {
  LineReader r(in);
  const Line& header = r.next("header 'n m nS nT'");
  if (header.tokens.size() != 4) fail(header.number, "expected header 'n m nS nT'");
  long long n = count_field(header, 0, "n", kMaxVertices);
  long long m = count_field(header, 1, "m", kMaxRecords);
  long long n_sources = count_field(header, 2, "nS", n);
  long long n_sinks = count_field(header, 3, "nT", n);

  FlowNetwork net;
  net.n = static_cast<int>(n);
  net.directed = directed;

  const Line& src = r.next("source line");
  if (src.tokens.size() != static_cast<size_t>(n_sources)) {
    fail(src.number, "expected " + std::to_string(n_sources) + " source vertices");
  }
  for (size_t i = 0; i < src.tokens.size(); ++i) {
    net.sources.push_back(vertex_field(src, i, "source", n));
  }
  const Line& snk = r.next("sink line");
  if (snk.tokens.size() != static_cast<size_t>(n_sinks)) {
    fail(snk.number, "expected " + std::to_string(n_sinks) + " sink vertices");
  }
  for (size_t i = 0; i < snk.tokens.size(); ++i) {
    net.sinks.push_back(vertex_field(snk, i, "sink", n));
  }
  std::vector<char> is_source(static_cast<size_t>(n) + 1, 0);
  for (Vertex s : net.sources) is_source[s] = 1;
  for (Vertex t : net.sinks) {
    if (is_source[t]) {
      fail(snk.number, "vertex " + std::to_string(t) + " is both source and sink");
    }
  }

  for (long long i = 0; i < m; ++i) {
    const Line& e = r.next("arc line 'u v cap'");
    if (e.tokens.size() != 3) fail(e.number, "expected 'u v cap'");
    FlowArc arc;
    arc.u = vertex_field(e, 0, "tail", n);
    arc.v = vertex_field(e, 1, "head", n);
    arc.cap = int_field(e, 2, "capacity");
    if (arc.cap < 0 || arc.cap > kMaxCapacity) {
      fail(e.number, "capacity out of range 0..1e12: " + e.tokens[2]);
    }
    arc.id = static_cast<EdgeId>(i);
    net.arcs.push_back(arc);
  }
  r.finish();
  validate(net);
  return net;
}

PolygonInstance read_polygon(std::istream& in) {
  LineReader r(in);
  const Line& header = r.next("header 'N'");
  if (header.tokens.size() != 1) fail(header.number, "expected header 'N'");
  long long n = count_field(header, 0, "N", kMaxRecords);

  PolygonInstance inst;
  for (long long i = 0; i < n; ++i) {
    const Line& row = r.next("point line 'xp yp t'");
    if (row.tokens.size() != 3) fail(row.number, "expected 'xp yp t'");
    Point p;
    p.x = double_field(row, 0, "xp");
    p.y = double_field(row, 1, "yp");
    double t = double_field(row, 2, "t");
    inst.points.push_back(p);
    inst.t.push_back(t);
  }
  r.finish();
  return inst;
}

std::string write_bipartite(const BipartiteGraph& g) {
  std::ostringstream out;
  out << g.n_left << ' ' << g.n_right << ' ' << g.edges.size() << '\n';
  for (const BipartiteEdge& e : g.edges) {
    out << e.u << ' ' << e.v;
    if (g.has_costs) out << ' ' << decimal_to_string(e.cost, g.cost_scale);
    out << '\n';
  }
  return out.str();
}

std::string write_multigraph(const Multigraph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edges.size() << '\n';
  for (const MultiEdge& e : g.edges) {
    out << e.u << ' ' << e.v;
    if (g.has_costs) out << ' ' << decimal_to_string(e.cost, g.cost_scale);
    out << '\n';
  }
  return out.str();
}

std::string write_flow_network(const FlowNetwork& net) {
  std::ostringstream out;
  out << net.n << ' ' << net.arcs.size() << ' ' << net.sources.size() << ' '
      << net.sinks.size() << '\n';
  for (size_t i = 0; i < net.sources.size(); ++i) {
    out << (i ? " " : "") << net.sources[i];
  }
  out << '\n';
  for (size_t i = 0; i < net.sinks.size(); ++i) {
    out << (i ? " " : "") << net.sinks[i];
  }
  out << '\n';
  for (const FlowArc& a : net.arcs) {
    out << a.u << ' ' << a.v << ' ' << a.cap << '\n';
  }
  return out.str();
}

std::string write_polygon(const PolygonInstance& inst) {
  std::ostringstream out;
  out << inst.points.size() << '\n';
  for (size_t i = 0; i < inst.points.size(); ++i) {
    out << fmt_double(inst.points[i].x) << ' ' << fmt_double(inst.points[i].y) << ' '
        << fmt_double(inst.t[i]) << '\n';
  }
  return out.str();
}

}  // namespace netclass
