#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netclass/types.hpp"

namespace netclass {

struct Point {
  double x = 0;
  double y = 0;
};

// Weights of N points whose every triangle must have area equal to the sum
// of its three vertex weights. Weights must be positive and the last two
// equal; solutions exist only for N = 3 and two shapes of N = 4.
struct BalancedInstance {
  std::vector<double> weights;
};

// A point arrangement realizing the instance, or nullopt when none exists.
// N = 4 requires w1 = w2 or w1 + w2 = 2 * w4 (checked in that order).
std::optional<std::vector<Point>> balanced_arrangement(const BalancedInstance& inst);

// True iff every triple of points spans a triangle of area w_i + w_j + w_k,
// within tol * max(1, total weight) each.
bool balanced_check(const std::vector<Point>& points, const std::vector<double>& weights,
                    double tol);

// Division points p(i) = V(i) + t(i) * (V(i+1) - V(i)) of a closed polygon,
// indices cyclic.
std::vector<Point> polygon_forward(const std::vector<Point>& vertices,
                                   const std::vector<double>& t);

// Division points plus their ratios; the polygon itself is unknown.
struct PolygonInstance {
  std::vector<Point> points;
  std::vector<double> t;
};

// Per-axis solvability: exactly one polygon, a one-parameter family, or
// none at all.
enum class AxisStatus { Unique, Free, None };

const char* to_string(AxisStatus s);

struct PolygonReconstruction {
  AxisStatus x_status = AxisStatus::Unique;
  AxisStatus y_status = AxisStatus::Unique;
  // Empty when either axis has no solution. On a Free axis the unpinned
  // coordinate is anchored at 0.
  std::vector<Point> vertices;
  std::string note;
};

// Recovers the polygon from its division points. Each coordinate of V(1) is
// the unknown of one linear equation obtained by propagating x(i+1) =
// (x(i) - (1-t(i)) * prev) / t(i) around the cycle; ratios of exactly (or
// nearly) zero pin V(i) = p(i) and split the cycle into independently
// anchored chains instead.
PolygonReconstruction polygon_reconstruct(const PolygonInstance& inst);

// Side and median lengths: lb = |AC|, lc = |AB|, lm = |AM| with M the
// midpoint of BC.
struct TriangleInstance {
  double lb = 0;
  double lc = 0;
  double lm = 0;
};

struct Triangle {
  Point a;
  Point b;
  Point c;
  bool degenerate = false;  // zero area
};

// Closed-form construction with B = (0,0), C = (2a,0), M = (a,0) where
// a = sqrt((lb^2 + lc^2) / 2 - lm^2); nullopt when no triangle exists.
std::optional<Triangle> triangle_from_median_closed(const TriangleInstance& inst);

// Same triangle by nested bisection: the outer search fixes |BC|, the inner
// search places A on the circle of radius lm around M to match lc, and the
// outer bracket is steered by the resulting lb. leps and ueps bound the
// bisection interval widths.
std::optional<Triangle> triangle_from_median_search(const TriangleInstance& inst,
                                                    double leps = 1e-12,
                                                    double ueps = 1e-12);

}  // namespace netclass
