#pragma once

#include <cmath>
#include <numbers>
#include <variant>

namespace porism {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Tolerances shared by all modules. geom is absolute in scene units,
/// alg is relative and used for matrix / cross-ratio comparisons.
struct Tolerances {
  double geom = 1e-9;
  double alg = 1e-12;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

/// a*x + b*y + c = 0, stored with a^2 + b^2 = 1 and the first nonzero of
/// (a, b) positive. The line is oriented along direction() = (b, -a).
class Line2 {
 public:
  Line2(double a, double b, double c);

  static Line2 through(Point2 p, Point2 q);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

  Point2 normal() const { return {a_, b_}; }
  Point2 direction() const { return {b_, -a_}; }
  double signed_distance(Point2 p) const { return a_ * p.x + b_ * p.y + c_; }
  double distance(Point2 p) const { return std::abs(signed_distance(p)); }
  Point2 foot(Point2 p) const { return p - signed_distance(p) * normal(); }
  Point2 reflect(Point2 p) const { return p - 2.0 * signed_distance(p) * normal(); }
  /// 1-D coordinate along the oriented line, origin at the foot of (0,0).
  double coordinate(Point2 p) const { return dot(p, direction()); }
  Point2 at(double coord) const { return foot({0.0, 0.0}) + coord * direction(); }

  friend bool operator==(const Line2&, const Line2&) = default;

 private:
  double a_, b_, c_;
};

/// Intersection of two lines; throws Error(OutOfRange) for parallel lines.
Point2 intersect(const Line2& l, const Line2& m);

struct Circle {
  Point2 center;
  double radius = 1.0;

  Circle() = default;
  Circle(Point2 c, double r);
};

/// A point of a circle given by its angle, reduced to [0, 2pi).
class CirclePoint {
 public:
  CirclePoint() = default;
  explicit CirclePoint(double theta);

  double theta() const { return theta_; }
  Point2 unit() const { return {std::cos(theta_), std::sin(theta_)}; }
  Point2 on(const Circle& c) const { return c.center + c.radius * unit(); }

  static CirclePoint from_point(const Circle& c, Point2 p);

 private:
  double theta_ = 0.0;
};

double reduce_angle(double theta);
/// Shortest angular distance in [0, pi].
double angular_distance(CirclePoint a, CirclePoint b);
/// Signed difference b - a wrapped to (-pi, pi].
double signed_angle_difference(CirclePoint a, CirclePoint b);

struct Secant {
  CirclePoint a;
  CirclePoint b;
};
struct Tangent {
  CirclePoint a;
};
/// Real stand-in for the pair of complex intersection points: witness is
/// the point inside the circle on the perpendicular from the center at
/// distance sqrt(d^2 - r^2) from the line.
struct Disjoint {
  Point2 witness;
  Point2 mirror;
  double perp_distance;
};
using LineCircleMeet = std::variant<Secant, Tangent, Disjoint>;

LineCircleMeet line_circle_meet(const Circle& c, const Line2& l, const Tolerances& tol = {});

/// Maps scene coordinates to the unit circle frame of c and back.
inline Point2 to_unit(const Circle& c, Point2 p) { return (1.0 / c.radius) * (p - c.center); }
inline Point2 from_unit(const Circle& c, Point2 p) { return c.center + c.radius * p; }

bool on_circle(const Circle& c, Point2 p, const Tolerances& tol = {});
bool inside_circle(const Circle& c, Point2 p);

/// Other end of the chord from x through p. Returns x when the chord is tangent.
CirclePoint chord_second_point(const Circle& c, CirclePoint x, Point2 p, const Tolerances& tol = {});

Line2 polarity(const Circle& c, Point2 p);
Point2 pole(const Circle& c, const Line2& l, const Tolerances& tol = {});

}  // namespace porism
