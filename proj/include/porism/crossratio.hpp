#pragma once

#include <Eigen/Core>
#include <array>

#include "porism/geom.hpp"

namespace porism {

/// A real number or the point at infinity of the projective line.
class ExtReal {
 public:
  ExtReal(double v);  // NOLINT(google-explicit-constructor)
  static ExtReal infinity() { return ExtReal(); }

  bool is_infinite() const { return infinite_; }
  /// Throws Error(OutOfRange) for infinity.
  double value() const;

  friend bool operator==(const ExtReal&, const ExtReal&) = default;

 private:
  ExtReal() : value_(0.0), infinite_(true) {}
  double value_;
  bool infinite_;
};

/// cr(a,b;c,d) = (a-c)/(b-c) : (a-d)/(b-d).
///
/// a = b and c = d are allowed (value 1); any coincidence between {a, b}
/// and {c, d} within tol.geom would give 0 or infinity and is rejected with
/// DegenerateQuadruple, as is more than one infinite argument.
ExtReal cr_reals(ExtReal a, ExtReal b, ExtReal c, ExtReal d, const Tolerances& tol = {});

/// Affine coordinate on a line: t(P) = <P - origin, direction>.
struct AffineChart {
  Point2 origin;
  Point2 direction;
};

ExtReal cr_collinear(Point2 a, Point2 b, Point2 c, Point2 d, const Tolerances& tol = {});
ExtReal cr_collinear(Point2 a, Point2 b, Point2 c, Point2 d, const AffineChart& chart,
                     const Tolerances& tol = {});

/// Sine formula on the directions of four concurrent lines.
ExtReal cr_pencil(const Line2& l1, const Line2& l2, const Line2& l3, const Line2& l4,
                  const Tolerances& tol = {});

/// Cross-ratio of four circle points seen from a point of the circle. The
/// default witness is the midpoint of the widest gap between the four.
ExtReal cr_circle(const Circle& c, CirclePoint a, CirclePoint b, CirclePoint cc, CirclePoint d,
                  const Tolerances& tol = {});
ExtReal cr_circle(const Circle& c, CirclePoint a, CirclePoint b, CirclePoint cc, CirclePoint d,
                  CirclePoint witness, const Tolerances& tol = {});

/// Projective transformation of the plane, acting on homogeneous (x, y, 1).
class ProjMap2 {
 public:
  explicit ProjMap2(const Eigen::Matrix3d& m);
  static ProjMap2 identity() { return ProjMap2(Eigen::Matrix3d::Identity()); }
  static ProjMap2 translation(double dx, double dy);

  const Eigen::Matrix3d& matrix() const { return m_; }

  Point2 apply(Point2 p) const;
  /// Lines map by the inverse transpose.
  Line2 apply(const Line2& l) const;

 private:
  Eigen::Matrix3d m_;
  Eigen::Matrix3d inv_t_;
};

}  // namespace porism
