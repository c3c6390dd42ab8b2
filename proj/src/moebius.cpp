#include "porism/moebius.hpp"

#include <algorithm>
#include <cmath>

#include "porism/errors.hpp"

namespace porism {

ProjPoint chart_pair(CirclePoint x) {
  const double half = 0.5 * x.theta();
  return {std::sin(half), std::cos(half)};
}

CirclePoint unchart_pair(ProjPoint t) { return CirclePoint(2.0 * std::atan2(t.u, t.v)); }

ExtReal chart(const Circle& /*c*/, CirclePoint x) {
  const ProjPoint t = chart_pair(x);
  if (x.theta() == kPi || std::abs(t.v) <= 1e-300) return ExtReal::infinity();
  return ExtReal(t.u / t.v);
}

CirclePoint unchart(const Circle& /*c*/, ExtReal t) {
  if (t.is_infinite()) return CirclePoint(kPi);
  return CirclePoint(2.0 * std::atan(t.value()));
}

MoebiusMap::MoebiusMap(double m00, double m01, double m10, double m11) : m_{m00, m01, m10, m11} {
  const double d = det();
  if (!std::isfinite(d) || d == 0.0) {
    throw Error(Errc::ValidationError, "Moebius matrix must be invertible");
  }
  const double s = 1.0 / std::sqrt(std::abs(d));
  for (double& x : m_) x *= s;
}

ProjPoint MoebiusMap::apply(ProjPoint t) const {
  ProjPoint r{m_[0] * t.u + m_[1] * t.v, m_[2] * t.u + m_[3] * t.v};
  const double n = std::hypot(r.u, r.v);
  return {r.u / n, r.v / n};
}

double MoebiusMap::max_abs() const {
  double m = 0.0;
  for (double x : m_) m = std::max(m, std::abs(x));
  return m;
}

bool MoebiusMap::same_map(const MoebiusMap& other, double tol) const {
  double minus = 0.0, plus = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    minus = std::max(minus, std::abs(m_[i] - other.m_[i]));
    plus = std::max(plus, std::abs(m_[i] + other.m_[i]));
  }
  return std::min(minus, plus) <= tol * std::max({1.0, max_abs(), other.max_abs()});
}

MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g) {
  return {f.m00() * g.m00() + f.m01() * g.m10(), f.m00() * g.m01() + f.m01() * g.m11(),
          f.m10() * g.m00() + f.m11() * g.m10(), f.m10() * g.m01() + f.m11() * g.m11()};
}

namespace {

ProjPoint normalized(ProjPoint p) {
  const double n = std::hypot(p.u, p.v);
  return {p.u / n, p.v / n};
}

double det(ProjPoint a, ProjPoint b) { return a.u * b.v - a.v * b.u; }

ProjPoint to_pair(const ExtReal& x) {
  return x.is_infinite() ? ProjPoint{1.0, 0.0} : ProjPoint{x.value(), 1.0};
}

// Sends s[0] -> 0, s[1] -> 1, s[2] -> infinity.
std::array<double, 4> standard_frame(const std::array<ProjPoint, 3>& s, const Tolerances& tol) {
  std::array<ProjPoint, 3> n{normalized(s[0]), normalized(s[1]), normalized(s[2])};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (std::abs(det(n[i], n[j])) <= tol.geom) {
        throw Error(Errc::DegenerateTriple, "triple has coincident points");
      }
    }
  }
  const double k0 = det(n[1], n[2]);
  const double k1 = det(n[1], n[0]);
  return {k0 * n[0].v, -k0 * n[0].u, k1 * n[2].v, -k1 * n[2].u};
}

}  // namespace

MoebiusMap from_triples(const std::array<ProjPoint, 3>& src, const std::array<ProjPoint, 3>& dst,
                        const Tolerances& tol) {
  const auto a = standard_frame(src, tol);
  const auto b = standard_frame(dst, tol);
  // adjugate of b is a projective inverse
  const MoebiusMap b_inv(b[3], -b[1], -b[2], b[0]);
  return compose(b_inv, MoebiusMap(a[0], a[1], a[2], a[3]));
}

MoebiusMap from_triples(const std::array<ExtReal, 3>& src, const std::array<ExtReal, 3>& dst,
                        const Tolerances& tol) {
  return from_triples(std::array<ProjPoint, 3>{to_pair(src[0]), to_pair(src[1]), to_pair(src[2])},
                      std::array<ProjPoint, 3>{to_pair(dst[0]), to_pair(dst[1]), to_pair(dst[2])},
                      tol);
}

MoebiusMap involution_of(const Circle& c, Point2 p, const Tolerances& tol) {
  std::array<ProjPoint, 3> src{}, dst{};
  for (int i = 0; i < 3; ++i) {
    const CirclePoint x(kTwoPi * i / 3.0);
    src[i] = chart_pair(x);
    dst[i] = chart_pair(chord_second_point(c, x, p, tol));
  }
  return from_triples(src, dst, tol);
}

bool is_identity(const MoebiusMap& f, const Tolerances& tol) {
  if (!f.orientation_preserving()) return false;
  const double scale = std::max(1.0, f.max_abs());
  const bool scalar = std::abs(f.m01()) <= tol.alg * scale &&
                      std::abs(f.m10()) <= tol.alg * scale &&
                      std::abs(f.m00() - f.m11()) <= tol.alg * scale;
  if (!scalar) return false;
  for (int i = 0; i < 3; ++i) {
    const CirclePoint x(kTwoPi * i / 3.0 + 0.25);
    if (angular_distance(f.apply(x), x) > tol.geom) return false;
  }
  return true;
}

MoebiusClass classify(const MoebiusMap& f, double tol, const Tolerances& tols) {
  if (!f.orientation_preserving()) return Reversing{};
  if (is_identity(f, tols)) return Identity{};
  const double tr = std::abs(f.trace());
  if (tr < 2.0 - tol) return Elliptic{tr};
  if (tr <= 2.0 + tol) return Parabolic{};
  return Hyperbolic{tr};
}

namespace {

// Kernel of the rank-one matrix [[a, b], [c, d]], read off its larger row.
ProjPoint kernel(double a, double b, double c, double d) {
  if (std::hypot(a, b) >= std::hypot(c, d)) return normalized({-b, a});
  return normalized({-d, c});
}

}  // namespace

std::vector<CirclePoint> fixed_points(const Circle& /*c*/, const MoebiusMap& f, double tol,
                                      const Tolerances& tols) {
  const MoebiusClass cls = classify(f, tol, tols);
  if (std::holds_alternative<Identity>(cls)) {
    throw Error(Errc::IsIdentity, "the identity fixes every point");
  }
  if (std::holds_alternative<Elliptic>(cls)) return {};

  std::vector<CirclePoint> out;
  if (std::holds_alternative<Parabolic>(cls)) {
    // N = M - (tr/2) I is nilpotent; its image is its kernel.
    const double h = 0.5 * f.trace();
    const double n00 = f.m00() - h, n01 = f.m01(), n10 = f.m10(), n11 = f.m11() - h;
    const ProjPoint col = std::hypot(n00, n10) >= std::hypot(n01, n11) ? ProjPoint{n00, n10}
                                                                       : ProjPoint{n01, n11};
    out.push_back(unchart_pair(normalized(col)));
    return out;
  }

  const double tr = f.trace();
  const double dt = f.det();
  const double disc = std::max(0.0, tr * tr - 4.0 * dt);
  const double l1 = 0.5 * (tr + std::copysign(std::sqrt(disc), tr == 0.0 ? 1.0 : tr));
  const double l2 = dt / l1;
  for (double lam : {l1, l2}) {
    out.push_back(
        unchart_pair(kernel(f.m00() - lam, f.m01(), f.m10(), f.m11() - lam)));
  }
  std::sort(out.begin(), out.end(),
            [](CirclePoint a, CirclePoint b) { return a.theta() < b.theta(); });
  return out;
}

}  // namespace porism
