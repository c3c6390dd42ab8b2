#include "porism/geom.hpp"

#include <string>

#include "porism/errors.hpp"

namespace porism {

Line2::Line2(double a, double b, double c) {
  const double n = std::hypot(a, b);
  if (!(n > 0.0) || !std::isfinite(n) || !std::isfinite(c)) {
    throw Error(Errc::ValidationError, "line needs (a, b) != (0, 0) and finite coefficients");
  }
  // Already-normalized input is kept bit-for-bit so that storage round trips.
  if (n != 1.0) {
    a /= n;
    b /= n;
    c /= n;
  }
  if (a < 0.0 || (a == 0.0 && b < 0.0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  a_ = a + 0.0;
  b_ = b + 0.0;
  c_ = c + 0.0;
}

Line2 Line2::through(Point2 p, Point2 q) {
  const double a = p.y - q.y;
  const double b = q.x - p.x;
  if (a == 0.0 && b == 0.0) {
    throw Error(Errc::ValidationError, "line through two coincident points");
  }
  return Line2(a, b, -(a * p.x + b * p.y));
}

Point2 intersect(const Line2& l, const Line2& m) {
  const double det = l.a() * m.b() - l.b() * m.a();
  if (std::abs(det) < 1e-15) {
    throw Error(Errc::OutOfRange, "intersection of parallel lines");
  }
  return {(l.b() * m.c() - m.b() * l.c()) / det, (m.a() * l.c() - l.a() * m.c()) / det};
}

Circle::Circle(Point2 c, double r) : center(c), radius(r) {
  if (!(r > 0.0) || !std::isfinite(r) || !std::isfinite(c.x) || !std::isfinite(c.y)) {
    throw Error(Errc::ValidationError, "circle radius must be positive and finite");
  }
}

double reduce_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

CirclePoint::CirclePoint(double theta) : theta_(reduce_angle(theta)) {
  if (!std::isfinite(theta)) throw Error(Errc::OutOfRange, "circle point angle must be finite");
}

CirclePoint CirclePoint::from_point(const Circle& c, Point2 p) {
  const Point2 u = to_unit(c, p);
  return CirclePoint(std::atan2(u.y, u.x));
}

double signed_angle_difference(CirclePoint a, CirclePoint b) {
  double d = std::remainder(b.theta() - a.theta(), kTwoPi);
  if (d <= -kPi) d += kTwoPi;
  return d;
}

double angular_distance(CirclePoint a, CirclePoint b) {
  return std::abs(signed_angle_difference(a, b));
}

bool on_circle(const Circle& c, Point2 p, const Tolerances& tol) {
  return std::abs(distance(p, c.center) - c.radius) <= tol.geom;
}

bool inside_circle(const Circle& c, Point2 p) { return distance(p, c.center) < c.radius; }

LineCircleMeet line_circle_meet(const Circle& c, const Line2& l, const Tolerances& tol) {
  const double s = l.signed_distance(c.center);
  const double d = std::abs(s);
  const double r = c.radius;
  const Point2 foot = c.center - s * l.normal();
  if (d < r - tol.geom) {
    const double h = std::sqrt(r * r - d * d);
    return Secant{CirclePoint::from_point(c, foot - h * l.direction()),
                  CirclePoint::from_point(c, foot + h * l.direction())};
  }
  if (d <= r + tol.geom) {
    return Tangent{CirclePoint::from_point(c, foot)};
  }
  // unit vector from the center towards the line
  const Point2 u = (s > 0.0 ? -1.0 : 1.0) * l.normal();
  const double h = std::sqrt(d * d - r * r);
  const Point2 witness = c.center + (d - h) * u;
  return Disjoint{witness, l.reflect(witness), d};
}

CirclePoint chord_second_point(const Circle& c, CirclePoint x, Point2 p, const Tolerances& tol) {
  if (on_circle(c, p, tol)) {
    throw Error(Errc::PivotOnCircle, "pivot lies on the circle");
  }
  const Point2 xs = x.unit();
  const Point2 dir = to_unit(c, p) - xs;
  // |xs + t dir|^2 = 1 has roots t = 0 and t = -2 <xs, dir> / |dir|^2
  const double t = -2.0 * dot(xs, dir) / dot(dir, dir);
  const Point2 y = xs + t * dir;
  return CirclePoint(std::atan2(y.y, y.x));
}

Line2 polarity(const Circle& c, Point2 p) {
  const Point2 v = p - c.center;
  if (v.x == 0.0 && v.y == 0.0) {
    throw Error(Errc::PolarUndefined, "the center has no polar line");
  }
  // <v, X - center> = r^2
  return Line2(v.x, v.y, -dot(v, c.center) - c.radius * c.radius);
}

Point2 pole(const Circle& c, const Line2& l, const Tolerances& tol) {
  const double s = l.signed_distance(c.center);
  if (std::abs(s) <= tol.geom * c.radius) {
    throw Error(Errc::PoleAtInfinity, "line through the center has its pole at infinity");
  }
  // polar of center + v is {X : <v, X - center> = r^2}; match with the normal form
  const double k = -c.radius * c.radius / s;
  return c.center + k * l.normal();
}

}  // namespace porism
