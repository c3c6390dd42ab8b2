#include "porism/hyperbolic.hpp"

#include <cmath>
#include <string>

#include "porism/crossratio.hpp"
#include "porism/errors.hpp"

namespace porism {

namespace {

// Log of cr(a,b;p,q) along the secant line(p, q); a, b its circle points.
double log_abs_cr_on_chord(const Circle& c, Point2 p, Point2 q, const Tolerances& tol) {
  const Line2 l = Line2::through(p, q);
  const auto meet = line_circle_meet(c, l, tol);
  const auto& sec = std::get<Secant>(meet);
  return std::log(std::abs(cr_collinear(sec.a.on(c), sec.b.on(c), p, q, tol).value()));
}

}  // namespace

double klein_distance(const Circle& c, Point2 p, Point2 q, const Tolerances& tol) {
  for (Point2 x : {p, q}) {
    if (!(distance(x, c.center) < c.radius - tol.geom)) {
      throw Error(Errc::NotInterior, "klein_distance needs points strictly inside the circle");
    }
  }
  if (distance(p, q) <= tol.geom) return 0.0;
  return 0.5 * std::abs(log_abs_cr_on_chord(c, p, q, tol));
}

PairInvariant pair_invariant(const Circle& c, Point2 p, Point2 q, const Tolerances& tol) {
  if (on_circle(c, p, tol) || on_circle(c, q, tol)) {
    throw Error(Errc::OnCircle, "pair_invariant needs points off the circle");
  }
  const bool pin = inside_circle(c, p), qin = inside_circle(c, q);
  if (pin && qin) return PointPoint{klein_distance(c, p, q, tol)};
  if (pin != qin) {
    // cr(a,b;p,q) < 0 here; -cr is the cross-ratio with the polar foot.
    return PointLine{0.5 * std::abs(log_abs_cr_on_chord(c, p, q, tol))};
  }
  if (distance(p, q) <= tol.geom) return LinesDistance{0.0};
  const Line2 l = Line2::through(p, q);
  const auto meet = line_circle_meet(c, l, tol);
  if (std::holds_alternative<Secant>(meet)) {
    return LinesDistance{0.5 * std::abs(log_abs_cr_on_chord(c, p, q, tol))};
  }
  if (std::holds_alternative<Tangent>(meet)) {
    // polars meet on the circle: asymptotically parallel
    return LinesDistance{0.0};
  }
  const Point2 w = std::get<Disjoint>(meet).witness;
  const Point2 u = p - w, v = q - w;
  double angle = std::atan2(std::abs(cross(u, v)), dot(u, v));
  if (angle > 0.5 * kPi) angle = kPi - angle;
  return LinesAngle{angle};
}

double right_angled_circumradius(int n) {
  if (n <= 4) {
    throw Error(Errc::NoSuchPolygon,
                "no regular right-angled hyperbolic polygon with " + std::to_string(n) + " sides");
  }
  const double cosh_r = 1.0 / std::tan(kPi / n);
  return std::tanh(std::acosh(cosh_r));
}

std::vector<Point2> right_angled_polygon(int n) {
  const double r = right_angled_circumradius(n);
  std::vector<Point2> v;
  v.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double a = kTwoPi * k / n;
    v.push_back({r * std::cos(a), r * std::sin(a)});
  }
  return v;
}

}  // namespace porism
