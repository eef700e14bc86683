#include "netclass/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace netclass {

const char* to_string(AxisStatus s) {
  switch (s) {
    case AxisStatus::Unique: return "UNIQUE";
    case AxisStatus::Free: return "FREE";
    case AxisStatus::None: return "NONE";
  }
  return "?";
}

namespace {

constexpr double kNearZeroRatio = 1e-12;  // below this a ratio acts as an anchor
constexpr double kClosureTol = 1e-9;

double triangle_area(const Point& a, const Point& b, const Point& c) {
  return std::fabs((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y)) / 2.0;
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw InputError(std::string(what) + " must be finite");
}

}  // namespace

std::optional<std::vector<Point>> balanced_arrangement(const BalancedInstance& inst) {
  const std::vector<double>& w = inst.weights;
  const size_t n = w.size();
  if (n < 3) throw InputError("need at least 3 weights");
  for (double wi : w) {
    require_finite(wi, "weight");
    if (wi <= 0) throw InputError("weights must be positive");
  }
  if (w[n - 2] != w[n - 1]) throw InputError("the last two weights must be equal");

  if (n >= 5) return std::nullopt;
  if (n == 3) {
    // The last two points sit two apart on the x axis; the first one's
    // height makes the single triangle's area the total weight.
    return std::vector<Point>{{0, w[0] + w[1] + w[2]}, {0, 0}, {2, 0}};
  }
  const double h = w[0] + w[2] + w[3];
  if (w[0] == w[1])
    return std::vector<Point>{{0, h}, {2 * (w[0] + w[1] + w[3]) / h, h}, {0, 0}, {2, 0}};
  if (w[0] + w[1] == 2 * w[3])
    return std::vector<Point>{{1, h}, {1, -(w[1] + w[2] + w[3])}, {0, 0}, {2, 0}};
  return std::nullopt;
}

bool balanced_check(const std::vector<Point>& points, const std::vector<double>& weights,
                    double tol) {
  if (points.size() != weights.size()) throw InputError("points and weights differ in length");
  if (points.size() < 3) throw InputError("need at least 3 points");
  const size_t n = points.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        double target = weights[i] + weights[j] + weights[k];
        double area = triangle_area(points[i], points[j], points[k]);
        if (std::fabs(area - target) > tol * std::max(1.0, target)) return false;
      }
  return true;
}

std::vector<Point> polygon_forward(const std::vector<Point>& vertices,
                                   const std::vector<double>& t) {
  if (vertices.size() != t.size()) throw InputError("vertices and ratios differ in length");
  if (vertices.size() < 3) throw InputError("need at least 3 vertices");
  const size_t n = vertices.size();
  std::vector<Point> out(n);
  for (size_t i = 0; i < n; ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % n];
    out[i] = {(1 - t[i]) * a.x + t[i] * b.x, (1 - t[i]) * a.y + t[i] * b.y};
  }
  return out;
}

namespace {

struct AxisSolve {
  AxisStatus status = AxisStatus::Unique;
  std::vector<double> coord;
};

// One axis of the all-ratios-nonzero case. The first coordinate is the
// unknown of x(1) * (a - 1) = -b with (a, b) propagated once around the
// cycle; amag/bmag carry running magnitudes so the closure test scales with
// the conditioning of the propagation rather than absolute size.
AxisSolve solve_cyclic_axis(const std::vector<double>& p, const std::vector<double>& t) {
  const size_t n = p.size();
  std::vector<double> va(n), vb(n);
  va[0] = 1;
  vb[0] = 0;
  double a = 1, b = 0, amag = 1, bmag = 0;
  for (size_t i = 1; i <= n; ++i) {
    const double factor = (t[i - 1] - 1.0) / t[i - 1];
    const double shift = p[i - 1] / t[i - 1];
    a = factor * a;
    b = factor * b + shift;
    amag = std::fabs(factor) * amag;
    bmag = std::fabs(factor) * bmag + std::fabs(shift);
    if (i < n) {
      va[i] = a;
      vb[i] = b;
    }
  }

  AxisSolve out;
  double x1 = 0;
  if (std::fabs(a - 1.0) > kClosureTol * std::max(1.0, amag)) {
    out.status = AxisStatus::Unique;
    x1 = -b / (a - 1.0);
  } else if (std::fabs(b) <= kClosureTol * std::max(1.0, bmag)) {
    out.status = AxisStatus::Free;
    x1 = 0;
  } else {
    out.status = AxisStatus::None;
    return out;
  }
  out.coord.resize(n);
  for (size_t i = 0; i < n; ++i) out.coord[i] = va[i] * x1 + vb[i];
  return out;
}

// One axis of the anchored case: every position q with t(q) = 0 pins
// vertex q at p(q), splitting the cycle into chains solved independently
// from their closing anchor.
AxisSolve solve_anchored_axis(const std::vector<double>& p, const std::vector<double>& t,
                              const std::vector<char>& anchor) {
  const size_t n = p.size();
  AxisSolve out;
  out.status = AxisStatus::Unique;
  out.coord.assign(n, 0.0);

  for (size_t q = 0; q < n; ++q) {
    if (!anchor[q]) continue;
    out.coord[q] = p[q];

    // Chain q+1 .. q' (exclusive), closed by the next anchor q'.
    size_t len = 0;
    while (!anchor[(q + 1 + len) % n]) ++len;
    if (len == 0) continue;

    // x(q') = a * x(q+1) + b over the chain's relations.
    double a = 1, b = 0, bmag = 0;
    for (size_t s = 0; s < len; ++s) {
      const size_t i = (q + 1 + s) % n;
      const double factor = (t[i] - 1.0) / t[i];
      const double shift = p[i] / t[i];
      a = factor * a;
      b = factor * b + shift;
      bmag = std::fabs(factor) * bmag + std::fabs(shift);
    }
    const double target = p[(q + 1 + len) % n];

    double start = 0;
    if (a != 0.0) {
      start = (target - b) / a;
    } else if (std::fabs(target - b) <= kClosureTol * std::max(1.0, bmag + std::fabs(target))) {
      if (out.status == AxisStatus::Unique) out.status = AxisStatus::Free;
      start = 0;
    } else {
      out.status = AxisStatus::None;
      return out;
    }

    double x = start;
    for (size_t s = 0; s < len; ++s) {
      const size_t i = (q + 1 + s) % n;
      out.coord[i] = x;
      x = ((t[i] - 1.0) / t[i]) * x + p[i] / t[i];
    }
  }
  return out;
}

}  // namespace

PolygonReconstruction polygon_reconstruct(const PolygonInstance& inst) {
  const size_t n = inst.points.size();
  if (inst.t.size() != n) throw InputError("points and ratios differ in length");
  if (n < 3) throw InputError("need at least 3 division points");
  for (size_t i = 0; i < n; ++i) {
    require_finite(inst.points[i].x, "point coordinate");
    require_finite(inst.points[i].y, "point coordinate");
    require_finite(inst.t[i], "ratio");
  }

  PolygonReconstruction out;
  std::vector<double> t(n);
  std::vector<char> anchor(n, 0);
  bool any_anchor = false;
  bool coerced = false;
  for (size_t i = 0; i < n; ++i) {
    t[i] = inst.t[i];
    if (std::fabs(t[i]) < kNearZeroRatio) {
      if (t[i] != 0.0) coerced = true;
      t[i] = 0.0;
      anchor[i] = 1;
      any_anchor = true;
    }
  }
  if (coerced) out.note = "near-zero ratios treated as 0";

  std::vector<double> px(n), py(n);
  for (size_t i = 0; i < n; ++i) {
    px[i] = inst.points[i].x;
    py[i] = inst.points[i].y;
  }

  AxisSolve xs = any_anchor ? solve_anchored_axis(px, t, anchor) : solve_cyclic_axis(px, t);
  AxisSolve ys = any_anchor ? solve_anchored_axis(py, t, anchor) : solve_cyclic_axis(py, t);
  out.x_status = xs.status;
  out.y_status = ys.status;
  if (xs.status == AxisStatus::None || ys.status == AxisStatus::None) return out;

  out.vertices.resize(n);
  for (size_t i = 0; i < n; ++i) out.vertices[i] = {xs.coord[i], ys.coord[i]};
  if (xs.status == AxisStatus::Free || ys.status == AxisStatus::Free) {
    if (!out.note.empty()) out.note += "; ";
    out.note += "free coordinates anchored at 0";
  }
  return out;
}

namespace {

void require_triangle_instance(const TriangleInstance& inst) {
  require_finite(inst.lb, "length");
  require_finite(inst.lc, "length");
  require_finite(inst.lm, "length");
  if (inst.lb <= 0 || inst.lc <= 0 || inst.lm <= 0)
    throw InputError("lengths must be positive");
}

double dist(const Point& p, const Point& q) { return std::hypot(p.x - q.x, p.y - q.y); }

}  // namespace

std::optional<Triangle> triangle_from_median_closed(const TriangleInstance& inst) {
  require_triangle_instance(inst);
  const double lb = inst.lb, lc = inst.lc, lm = inst.lm;
  const double half_sq = (lb * lb + lc * lc) / 2.0 - lm * lm;
  if (half_sq <= 0) return std::nullopt;
  const double a = std::sqrt(half_sq);
  double cos_alpha = (lm * lm + a * a - lc * lc) / (2.0 * lm * a);
  if (std::fabs(cos_alpha) > 1.0 + 1e-12) return std::nullopt;
  cos_alpha = std::clamp(cos_alpha, -1.0, 1.0);
  const double sin_alpha = std::sqrt(1.0 - cos_alpha * cos_alpha);

  Triangle tri;
  tri.b = {0, 0};
  tri.c = {2 * a, 0};
  tri.a = {a - lm * cos_alpha, lm * sin_alpha};
  tri.degenerate = std::fabs(cos_alpha) == 1.0;
  return tri;
}

std::optional<Triangle> triangle_from_median_search(const TriangleInstance& inst, double leps,
                                                    double ueps) {
  require_triangle_instance(inst);
  if (!(leps > 0) || !(ueps > 0)) throw InputError("search tolerances must be positive");
  const double lb = inst.lb, lc = inst.lc, lm = inst.lm;
  const double pi = std::acos(-1.0);
  const double lmax = 2.0 * (lm + std::max(lb, lc));

  // Angle at M between MB and MA matching |AB| = lc; |AB| grows with the
  // angle, so plain bisection applies.
  auto solve_alpha = [&](double a) {
    double lo = 0, hi = pi;
    for (int iter = 0; iter < 200 && hi - lo > ueps; ++iter) {
      double mid = 0.5 * (lo + hi);
      double c_sq = lm * lm + a * a - 2.0 * lm * a * std::cos(mid);
      if (c_sq < lc * lc)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  };

  double lo = 0, hi = lmax;
  for (int iter = 0; iter < 300 && hi - lo > leps; ++iter) {
    const double length = 0.5 * (lo + hi);
    const double a = 0.5 * length;
    if (lm + a < lc || lm + a < lb) {  // too small to reach either endpoint
      lo = length;
      continue;
    }
    const double alpha = solve_alpha(a);
    // |AC| uses the supplementary angle on the other side of M
    const double b_sq = lm * lm + a * a - 2.0 * lm * a * std::cos(pi - alpha);
    if (b_sq < lb * lb)
      lo = length;
    else
      hi = length;
  }

  const double length = 0.5 * (lo + hi);
  const double a = 0.5 * length;
  const double scale = std::max({1.0, lb, lc, lm});
  if (a <= std::max(4.0 * leps, 1e-9 * scale)) return std::nullopt;

  const double alpha = solve_alpha(a);
  Triangle tri;
  tri.b = {0, 0};
  tri.c = {2 * a, 0};
  tri.a = {a - lm * std::cos(alpha), lm * std::sin(alpha)};
  tri.degenerate = std::fabs(tri.a.y) <= 1e-9 * scale;

  // The bracket converges whether or not a triangle exists; only length
  // reproduction tells them apart.
  const double got_c = dist(tri.a, tri.b);
  const double got_b = dist(tri.a, tri.c);
  if (std::fabs(got_c - lc) > 1e-6 * std::max(1.0, lc)) return std::nullopt;
  if (std::fabs(got_b - lb) > 1e-6 * std::max(1.0, lb)) return std::nullopt;
  return tri;
}

}  // namespace netclass
