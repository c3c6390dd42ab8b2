#pragma once

#include <variant>
#include <vector>

#include "porism/geom.hpp"

namespace porism {

/// Hyperbolic distance in the Cayley-Klein model of the disk bounded by c:
/// half the absolute log of cr(a,b;p,q) with a, b the ends of the chord pq.
double klein_distance(const Circle& c, Point2 p, Point2 q, const Tolerances& tol = {});

struct PointPoint {
  double distance;
};
/// Distance from the interior point to the polar line of the exterior one.
struct PointLine {
  double distance;
};
/// Angle in (0, pi/2] between the polars of two exterior points.
struct LinesAngle {
  double angle;
};
/// Distance between the (ultraparallel or asymptotic) polars of two exterior points.
struct LinesDistance {
  double distance;
};
using PairInvariant = std::variant<PointPoint, PointLine, LinesAngle, LinesDistance>;

PairInvariant pair_invariant(const Circle& c, Point2 p, Point2 q, const Tolerances& tol = {});

/// Regular right-angled hyperbolic n-gon centered in the unit disk, first
/// vertex on the positive x-axis, counterclockwise. Needs n >= 5.
std::vector<Point2> right_angled_polygon(int n);
/// Klein circumradius tanh(arccosh(cot(pi/n))).
double right_angled_circumradius(int n);

}  // namespace porism
