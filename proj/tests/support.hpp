#pragma once

// Test-side oracles and scene generators. Nothing here calls into the library's
// geometry: the chord map, cross-ratios, witnesses and closing pivots are all
// recomputed from closed forms.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

#include "porism/geom.hpp"
#include "porism/random.hpp"
#include "porism/sphere.hpp"

namespace oracle {

using cplx = std::complex<double>;
using porism::Circle;
using porism::Point2;

inline constexpr double kPi = std::numbers::pi;

inline cplx to_c(Point2 p) { return {p.x, p.y}; }
inline Point2 to_p(cplx z) { return {z.real(), z.imag()}; }

// Second end of the chord from the unit-circle point x through p:
// x' = (p - x) / (1 - x conj(p)).
inline cplx unit_chord(cplx x, cplx p) { return (p - x) / (1.0 - x * std::conj(p)); }

inline double chord_angle(const Circle& c, double theta, Point2 p) {
  const cplx pu = (to_c(p) - to_c(c.center)) / c.radius;
  return std::arg(unit_chord(std::polar(1.0, theta), pu));
}

// Signed angle from the start to the chain's end, in (-pi, pi].
inline double signed_defect(const Circle& c, double theta, const std::vector<Point2>& pivots) {
  double t = theta;
  for (Point2 p : pivots) t = chord_angle(c, t, p);
  return std::arg(std::polar(1.0, t - theta));
}

inline double defect(const Circle& c, double theta, const std::vector<Point2>& pivots) {
  return std::abs(signed_defect(c, theta, pivots));
}

inline double cross_ratio(double a, double b, double c, double d) {
  return ((a - c) / (b - c)) / ((a - d) / (b - d));
}

// A line given by a point on it and a unit direction; coordinates are along dir.
struct Ray {
  Point2 origin;
  Point2 dir;
  Point2 at(double t) const { return origin + t * dir; }
  double coord(Point2 p) const { return porism::dot(p - origin, dir); }
};

// Intersection of the line through u, v with the ray's line.
inline std::optional<Point2> meet(Point2 u, Point2 v, const Ray& l) {
  const Point2 d = v - u;
  const double den = porism::cross(d, l.dir);
  if (std::abs(den) < 1e-12 * porism::norm(d)) return std::nullopt;
  const double t = porism::cross(l.origin - u, l.dir) / den;
  return u + t * d;
}

// The interior point of the complex meet of l with c, read in the plane, obtained here as
// the Poincare-disk image of the pole of l (the pole is a Klein-model point).
inline Point2 disjoint_witness(const Circle& c, const Ray& l) {
  const Point2 foot = l.at(l.coord(c.center));
  const Point2 u = (1.0 / c.radius) * (foot - c.center);
  const double d = porism::norm(u);
  const double k = 1.0 / d;
  const double poincare = k / (1.0 + std::sqrt(1.0 - k * k));
  return c.center + (c.radius * poincare / d) * u;
}

inline double oriented_angle(Point2 w, Point2 from, Point2 to) {
  const Point2 a = from - w, b = to - w;
  return std::atan2(porism::cross(a, b), porism::dot(a, b));
}

// Angle between the hyperbolic polars of two exterior points, measured in the conformal
// model: the polar of p is the circle centered at p orthogonal to the unit circle.
inline double conformal_polar_angle(Point2 p, Point2 q) {
  const double rp2 = porism::dot(p, p) - 1.0, rq2 = porism::dot(q, q) - 1.0;
  const double d2 = porism::dot(p - q, p - q);
  const double cosv = (rp2 + rq2 - d2) / (2.0 * std::sqrt(rp2 * rq2));
  return std::acos(std::min(1.0, std::abs(cosv)));
}

enum class Case { Secant, Tangent, Disjoint };

struct Quad {
  Case kind = Case::Secant;
  Circle circle;
  Ray ray;
  Point2 p, q, r, s;
  std::vector<Point2> pivots() const { return {p, q, r, s}; }
};

inline double circle_gap(const Circle& c, Point2 x) {
  return std::abs(porism::distance(x, c.center) - c.radius) / c.radius;
}

// Random scene whose pivots close the four-chord chain, solved from the closing condition
// in line coordinates: cross-ratio for a secant, reciprocal differences for a tangent and
// equal oriented angles at the interior witness for a disjoint line.
inline std::optional<Quad> satisfying_quad(Case kind, porism::Rng& rng) {
  Quad out;
  out.kind = kind;
  out.circle = Circle({rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)}, rng.uniform(0.5, 2.0));
  const double rho = out.circle.radius;
  const double phi = rng.uniform(0.0, 2.0 * kPi);
  const Point2 n{std::cos(phi), std::sin(phi)};
  double dist = 0.0;
  switch (kind) {
    case Case::Secant: dist = rng.uniform(0.0, 0.8) * rho; break;
    case Case::Tangent: dist = rho; break;
    case Case::Disjoint: dist = rng.uniform(1.2, 3.0) * rho; break;
  }
  out.ray = {out.circle.center + dist * n, {-n.y, n.x}};
  auto pick = [&] { return out.ray.at(rng.uniform(-3.0, 3.0) * rho); };
  out.p = pick();
  out.q = pick();
  out.s = pick();
  for (Point2 x : {out.p, out.q, out.s}) {
    if (circle_gap(out.circle, x) < 0.05) return std::nullopt;
  }
  const Ray& l = out.ray;
  if (kind == Case::Secant) {
    const double h = std::sqrt(rho * rho - dist * dist);
    const double a = -h, b = h;  // the ray origin is the foot of the center
    const double k = cross_ratio(a, b, l.coord(out.p), l.coord(out.q));
    const double sc = l.coord(out.s);
    const double m = (a - sc) / ((b - sc) * k);
    if (std::abs(m - 1.0) < 1e-6) return std::nullopt;
    out.r = l.at((m * b - a) / (m - 1.0));
  } else if (kind == Case::Tangent) {
    const double a = 0.0;
    const double lhs = 1.0 / (a - l.coord(out.p)) - 1.0 / (a - l.coord(out.q));
    const double inv = 1.0 / (a - l.coord(out.s)) - lhs;
    if (std::abs(inv) < 1e-6) return std::nullopt;
    out.r = l.at(a - 1.0 / inv);
  } else {
    const Point2 w = disjoint_witness(out.circle, l);
    const double ang = oriented_angle(w, out.p, out.q);
    const Point2 u = out.s - w;
    const Point2 v{std::cos(ang) * u.x - std::sin(ang) * u.y,
                   std::sin(ang) * u.x + std::cos(ang) * u.y};
    const auto r = meet(w, w + v, l);
    if (!r) return std::nullopt;
    out.r = *r;
  }
  if (circle_gap(out.circle, out.r) < 0.05) return std::nullopt;
  if (porism::distance(out.r, out.circle.center) > 20.0 * rho) return std::nullopt;
  return out;
}

// Same scene with r slid along the line by at least five percent of the radius.
inline std::optional<Quad> broken_quad(Quad q, porism::Rng& rng) {
  const double sign = rng.canonical() < 0.5 ? -1.0 : 1.0;
  q.r = q.r + (sign * rng.uniform(0.05, 0.3) * q.circle.radius) * q.ray.dir;
  if (circle_gap(q.circle, q.r) < 0.05) return std::nullopt;
  return q;
}

// Bisection on the signed closure defect for pivots (2,-1), (2,0), (2,1), (2,sigma) on the
// unit circle, with the start fixed. Returns nullopt when the bracket has no sign change.
inline std::optional<double> disjoint_sigma_star(double x0, double lo = -0.5, double hi = 0.5) {
  const Circle unit({0.0, 0.0}, 1.0);
  auto f = [&](double sigma) {
    return signed_defect(unit, x0, {{2.0, -1.0}, {2.0, 0.0}, {2.0, 1.0}, {2.0, sigma}});
  };
  double flo = f(lo);
  if (flo * f(hi) > 0.0) return std::nullopt;
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Inscribed quadrilateral x1 x2 x3 x4 cut by a secant l with chord ab. The sides x2x3 and
// x4x1 pass through q and s, chosen with |aq| = |bs| (q = s gives the classical butterfly);
// p and r are where the sides x1x2 and x3x4 cross l. The chain x1 -p-> x2 -q-> x3 -r-> x4
// -s-> x1 closes by construction.
struct Butterfly {
  Circle circle;
  Ray ray;
  Point2 a, b, p, q, r, s;
};

inline std::optional<Butterfly> forward_butterfly(porism::Rng& rng, bool classical) {
  Butterfly out;
  out.circle = Circle({rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)}, rng.uniform(0.5, 2.0));
  const Circle& c = out.circle;
  const double phi = rng.uniform(0.0, 2.0 * kPi);
  const Point2 n{std::cos(phi), std::sin(phi)};
  const double dist = rng.uniform(0.0, 0.8) * c.radius;
  out.ray = {c.center + dist * n, {-n.y, n.x}};
  const double h = std::sqrt(c.radius * c.radius - dist * dist);
  out.a = out.ray.at(-h);
  out.b = out.ray.at(h);
  const double tq = classical ? 0.0 : rng.uniform(-0.9, 0.9) * h;
  out.q = out.ray.at(tq);
  out.s = out.ray.at(-tq);
  const cplx z0 = to_c(c.center);
  auto on = [&](double t) { return to_p(z0 + c.radius * std::polar(1.0, t)); };
  const double t1 = rng.uniform(0.0, 2.0 * kPi), t2 = rng.uniform(0.0, 2.0 * kPi);
  const double t3 = chord_angle(c, t2, out.q), t4 = chord_angle(c, t1, out.s);
  const auto p = meet(on(t1), on(t2), out.ray);
  const auto r = meet(on(t3), on(t4), out.ray);
  if (!p || !r) return std::nullopt;
  out.p = *p;
  out.r = *r;
  for (Point2 x : {out.p, out.r}) {
    if (circle_gap(c, x) < 1e-3 || porism::distance(x, c.center) > 50.0 * c.radius) {
      return std::nullopt;
    }
  }
  const std::array<double, 4> t{t1, t2, t3, t4};
  for (int i = 0; i < 4; ++i) {
    const double gap = std::abs(std::arg(std::polar(1.0, t[i] - t[(i + 1) % 4])));
    if (gap < 1e-3) return std::nullopt;
  }
  return out;
}

// Sphere chord map: x + t (p - x) with t the nonzero root of |x + t(p - x)|^2 = 1.
inline porism::Point3 sphere_chord(porism::Point3 x, porism::Point3 p) {
  const porism::Point3 d = p - x;
  const double t = -2.0 * porism::dot(x, d) / porism::dot(d, d);
  return x + t * d;
}

inline porism::Point3 random_unit(porism::Rng& rng) {
  const double z = rng.uniform(-1.0, 1.0), a = rng.uniform(0.0, 2.0 * kPi);
  const double s = std::sqrt(1.0 - z * z);
  return {s * std::cos(a), s * std::sin(a), z};
}

inline double sphere_defect(porism::Point3 x, const std::vector<porism::Point3>& pivots) {
  porism::Point3 y = x;
  for (const auto& p : pivots) y = sphere_chord(y, p);
  const double c = porism::norm(porism::cross(x, y)), d = porism::dot(x, y);
  return std::atan2(c, d);
}

}  // namespace oracle
