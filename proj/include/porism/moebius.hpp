#pragma once

#include <array>
#include <variant>
#include <vector>

#include "porism/crossratio.hpp"
#include "porism/geom.hpp"

namespace porism {

/// Homogeneous coordinate [u : v] on the projective line; t = u / v.
struct ProjPoint {
  double u = 0.0;
  double v = 1.0;
};

/// Boundary chart of a circle: t = tan(theta / 2) on the normalized unit
/// circle, so theta = pi is the point at infinity.
ProjPoint chart_pair(CirclePoint x);
CirclePoint unchart_pair(ProjPoint t);
ExtReal chart(const Circle& c, CirclePoint x);
CirclePoint unchart(const Circle& c, ExtReal t);

/// Moebius transformation of a circle as a real 2x2 matrix acting on the
/// boundary chart. Stored with |det| = 1; M and -M are the same map.
class MoebiusMap {
 public:
  MoebiusMap(double m00, double m01, double m10, double m11);
  static MoebiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }

  double m00() const { return m_[0]; }
  double m01() const { return m_[1]; }
  double m10() const { return m_[2]; }
  double m11() const { return m_[3]; }
  double det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  double trace() const { return m_[0] + m_[3]; }
  bool orientation_preserving() const { return det() > 0.0; }

  ProjPoint apply(ProjPoint t) const;
  CirclePoint apply(CirclePoint x) const { return unchart_pair(apply(chart_pair(x))); }

  /// Equality as projective maps: min(|A - B|, |A + B|) <= tol * max(1, |A|).
  bool same_map(const MoebiusMap& other, double tol) const;
  double max_abs() const;

 private:
  std::array<double, 4> m_;
};

/// f after g.
MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g);

/// The unique map sending src[i] to dst[i].
MoebiusMap from_triples(const std::array<ExtReal, 3>& src, const std::array<ExtReal, 3>& dst,
                        const Tolerances& tol = {});
MoebiusMap from_triples(const std::array<ProjPoint, 3>& src, const std::array<ProjPoint, 3>& dst,
                        const Tolerances& tol = {});

/// The chord involution x -> other end of the chord through x and p.
MoebiusMap involution_of(const Circle& c, Point2 p, const Tolerances& tol = {});

struct Identity {};
struct Elliptic {
  double rotation_trace;
};
struct Parabolic {};
struct Hyperbolic {
  double translation_trace;
};
struct Reversing {};
using MoebiusClass = std::variant<Identity, Elliptic, Parabolic, Hyperbolic, Reversing>;

/// Matrix proportional to the identity within tol.alg and fixing three
/// sample chart points within tol.geom.
bool is_identity(const MoebiusMap& f, const Tolerances& tol = {});

/// Trace classification with det normalized to +1; tol is absolute on |tr|.
MoebiusClass classify(const MoebiusMap& f, double tol, const Tolerances& tols = {});

/// Boundary fixed points; count follows classify(f, tol).
std::vector<CirclePoint> fixed_points(const Circle& c, const MoebiusMap& f, double tol,
                                      const Tolerances& tols = {});

}  // namespace porism
