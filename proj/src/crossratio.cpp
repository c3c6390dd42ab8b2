#include "porism/crossratio.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <vector>

#include "porism/errors.hpp"

namespace porism {

ExtReal::ExtReal(double v) : value_(v), infinite_(false) {
  if (!std::isfinite(v)) {
    throw Error(Errc::OutOfRange, "ExtReal::Finite needs a finite value; use ExtReal::infinity()");
  }
}

double ExtReal::value() const {
  if (infinite_) throw Error(Errc::OutOfRange, "value() of infinity");
  return value_;
}

namespace {

struct Homog {
  double u, v;
};

Homog homog(const ExtReal& x) { return x.is_infinite() ? Homog{1.0, 0.0} : Homog{x.value(), 1.0}; }

// For finite arguments det(x, y) = x - y.
double det(Homog x, Homog y) { return x.u * y.v - x.v * y.u; }

bool coincide(const ExtReal& x, const ExtReal& y, double tol) {
  if (x.is_infinite() || y.is_infinite()) return x.is_infinite() && y.is_infinite();
  return std::abs(x.value() - y.value()) <= tol;
}

}  // namespace

ExtReal cr_reals(ExtReal a, ExtReal b, ExtReal c, ExtReal d, const Tolerances& tol) {
  const int infinities = a.is_infinite() + b.is_infinite() + c.is_infinite() + d.is_infinite();
  if (infinities > 1) {
    throw Error(Errc::DegenerateQuadruple, "more than one argument at infinity");
  }
  for (const ExtReal* x : {&a, &b}) {
    for (const ExtReal* y : {&c, &d}) {
      if (coincide(*x, *y, tol.geom)) {
        throw Error(Errc::DegenerateQuadruple, "cross-ratio has a zero or a pole here");
      }
    }
  }
  const Homog ha = homog(a), hb = homog(b), hc = homog(c), hd = homog(d);
  return ExtReal((det(ha, hc) * det(hb, hd)) / (det(hb, hc) * det(ha, hd)));
}

namespace {

// Chart along the line through the two farthest-apart points.
AffineChart default_chart(const std::array<Point2, 4>& pts, const Tolerances& tol) {
  double best = -1.0;
  Point2 p0{}, p1{};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double dd = distance(pts[i], pts[j]);
      if (dd > best) {
        best = dd;
        p0 = pts[i];
        p1 = pts[j];
      }
    }
  }
  if (best <= tol.geom) {
    throw Error(Errc::DegenerateQuadruple, "all four points coincide");
  }
  const Point2 dir = (1.0 / best) * (p1 - p0);
  double scale = 1.0;
  for (const Point2& p : pts) scale = std::max(scale, norm(p));
  for (const Point2& p : pts) {
    if (std::abs(cross(dir, p - p0)) > tol.geom * scale) {
      throw Error(Errc::NotCollinear, "points are not collinear");
    }
  }
  return {p0, dir};
}

}  // namespace

ExtReal cr_collinear(Point2 a, Point2 b, Point2 c, Point2 d, const Tolerances& tol) {
  return cr_collinear(a, b, c, d, default_chart({a, b, c, d}, tol), tol);
}

ExtReal cr_collinear(Point2 a, Point2 b, Point2 c, Point2 d, const AffineChart& chart,
                     const Tolerances& tol) {
  default_chart({a, b, c, d}, tol);  // collinearity check
  const double len = norm(chart.direction);
  if (!(len > 0.0)) throw Error(Errc::ValidationError, "chart direction is zero");
  auto coord = [&](Point2 p) { return dot(p - chart.origin, chart.direction); };
  // tol.geom is in scene units, the chart may rescale
  Tolerances scaled = tol;
  scaled.geom = tol.geom * len;
  return cr_reals(coord(a), coord(b), coord(c), coord(d), scaled);
}

ExtReal cr_pencil(const Line2& l1, const Line2& l2, const Line2& l3, const Line2& l4,
                  const Tolerances& tol) {
  const std::array<const Line2*, 4> lines{&l1, &l2, &l3, &l4};
  // Concurrency: locate the common point from the best-conditioned pair.
  double best = 0.0;
  Point2 x{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double s = std::abs(cross(lines[i]->normal(), lines[j]->normal()));
      if (s > best) {
        best = s;
        x = intersect(*lines[i], *lines[j]);
      }
    }
  }
  if (best <= tol.alg) {
    throw Error(Errc::DegenerateQuadruple, "all four lines are parallel");
  }
  const double scale = std::max(1.0, norm(x));
  for (const Line2* l : lines) {
    if (l->distance(x) > tol.geom * scale) {
      throw Error(Errc::NotConcurrent, "lines are not concurrent");
    }
  }
  auto angle = [](const Line2& l) { return std::atan2(l.direction().y, l.direction().x); };
  const double al = angle(l1), be = angle(l2), ga = angle(l3), de = angle(l4);
  const double s_ac = std::sin(al - ga), s_bc = std::sin(be - ga);
  const double s_ad = std::sin(al - de), s_bd = std::sin(be - de);
  for (double s : {s_ac, s_bc, s_ad, s_bd}) {
    if (std::abs(s) <= tol.geom) {
      throw Error(Errc::DegenerateQuadruple, "cross-ratio of lines has a zero or a pole here");
    }
  }
  return ExtReal((s_ac / s_bc) / (s_ad / s_bd));
}

ExtReal cr_circle(const Circle& c, CirclePoint a, CirclePoint b, CirclePoint cc, CirclePoint d,
                  const Tolerances& tol) {
  std::vector<double> th{a.theta(), b.theta(), cc.theta(), d.theta()};
  std::sort(th.begin(), th.end());
  double gap = th.front() + kTwoPi - th.back();
  double mid = th.back() + 0.5 * gap;
  for (std::size_t i = 0; i + 1 < th.size(); ++i) {
    if (th[i + 1] - th[i] > gap) {
      gap = th[i + 1] - th[i];
      mid = th[i] + 0.5 * gap;
    }
  }
  return cr_circle(c, a, b, cc, d, CirclePoint(mid), tol);
}

ExtReal cr_circle(const Circle& c, CirclePoint a, CirclePoint b, CirclePoint cc, CirclePoint d,
                  CirclePoint witness, const Tolerances& tol) {
  const Point2 x = witness.on(c);
  for (CirclePoint p : {a, b, cc, d}) {
    if (angular_distance(p, witness) * c.radius <= tol.geom) {
      throw Error(Errc::DegenerateQuadruple, "witness coincides with one of the points");
    }
  }
  return cr_pencil(Line2::through(x, a.on(c)), Line2::through(x, b.on(c)),
                   Line2::through(x, cc.on(c)), Line2::through(x, d.on(c)), tol);
}

ProjMap2::ProjMap2(const Eigen::Matrix3d& m) : m_(m) {
  Eigen::FullPivLU<Eigen::Matrix3d> lu(m);
  if (!lu.isInvertible() || !m.allFinite()) {
    throw Error(Errc::ValidationError, "projective map must be invertible");
  }
  inv_t_ = lu.inverse().transpose();
}

ProjMap2 ProjMap2::translation(double dx, double dy) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  m(0, 2) = dx;
  m(1, 2) = dy;
  return ProjMap2(m);
}

Point2 ProjMap2::apply(Point2 p) const {
  const Eigen::Vector3d h = m_ * Eigen::Vector3d(p.x, p.y, 1.0);
  const double scale = std::max({std::abs(h.x()), std::abs(h.y()), 1.0});
  if (std::abs(h.z()) <= 1e-14 * scale) {
    throw Error(Errc::ImageAtInfinity, "point maps to infinity");
  }
  return {h.x() / h.z(), h.y() / h.z()};
}

Line2 ProjMap2::apply(const Line2& l) const {
  const Eigen::Vector3d h = inv_t_ * Eigen::Vector3d(l.a(), l.b(), l.c());
  if (h.x() == 0.0 && h.y() == 0.0) {
    throw Error(Errc::ImageAtInfinity, "line maps to the line at infinity");
  }
  return Line2(h.x(), h.y(), h.z());
}

}  // namespace porism
