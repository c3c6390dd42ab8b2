#include "porism/castillon.hpp"

#include <algorithm>
#include <cmath>

#include "porism/errors.hpp"

namespace porism {

MoebiusMap holonomy(const Circle& c, std::span<const Point2> pivots, const Tolerances& tol) {
  if (pivots.empty()) throw Error(Errc::ValidationError, "holonomy needs at least one pivot");
  MoebiusMap h = involution_of(c, pivots.front(), tol);
  for (std::size_t i = 1; i < pivots.size(); ++i) {
    h = compose(involution_of(c, pivots[i], tol), h);
  }
  return h;
}

std::optional<Line2> common_line(std::span<const Point2> pivots, const Tolerances& tol) {
  double best = 0.0;
  Point2 a{}, b{};
  double scale = 1.0;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    scale = std::max(scale, norm(pivots[i]));
    for (std::size_t j = i + 1; j < pivots.size(); ++j) {
      const double d = distance(pivots[i], pivots[j]);
      if (d > best) {
        best = d;
        a = pivots[i];
        b = pivots[j];
      }
    }
  }
  if (best <= tol.geom) return std::nullopt;
  const Line2 l = Line2::through(a, b);
  for (Point2 p : pivots) {
    if (l.distance(p) > tol.geom * scale) return std::nullopt;
  }
  return l;
}

namespace {

double signed_defect(const Circle& c, CirclePoint x, std::span<const Point2> pivots,
                     const Tolerances& tol) {
  const ChordChain ch = trace_chain(c, x, pivots, tol);
  return signed_angle_difference(x, ch.vertices.back());
}

// Newton on the traced defect; keeps the iterate only while it improves.
CirclePoint polish(const Circle& c, CirclePoint x, std::span<const Point2> pivots,
                   const Tolerances& tol) {
  double g = signed_defect(c, x, pivots, tol);
  for (int it = 0; it < 20 && std::abs(g) > 1e-15; ++it) {
    constexpr double h = 1e-7;
    const double slope = (signed_defect(c, CirclePoint(x.theta() + h), pivots, tol) -
                          signed_defect(c, CirclePoint(x.theta() - h), pivots, tol)) /
                         (2.0 * h);
    if (!std::isfinite(slope) || std::abs(slope) < 1e-12) break;
    const CirclePoint next(x.theta() - g / slope);
    const double gn = signed_defect(c, next, pivots, tol);
    if (!(std::abs(gn) < std::abs(g))) break;
    x = next;
    g = gn;
  }
  return x;
}

bool degenerate(const Circle& c, const ChordChain& ch, const std::optional<Line2>& line,
                const Tolerances& tol) {
  const auto& v = ch.vertices;
  const std::size_t n = v.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    const CirclePoint next = (i + 1 == n) ? v[0] : v[i + 1];
    if (angular_distance(v[i], next) * c.radius <= tol.geom) return true;
  }
  if (line) {
    for (std::size_t i = 0; i < n; ++i) {
      if (line->distance(v[i].on(c)) <= tol.geom * std::max(1.0, c.radius)) return true;
    }
  }
  return false;
}

}  // namespace

CastillonOutcome solve_castillon(const Circle& c, std::span<const Point2> pivots,
                                 const Tolerances& tol) {
  const MoebiusMap h = holonomy(c, pivots, tol);
  if (is_identity(h, tol)) {
    constexpr double kGoldenAngle = 2.399963229728653;
    bool all_close = true;
    for (int k = 0; k < 20 && all_close; ++k) {
      all_close = trace_chain(c, CirclePoint(0.1 + kGoldenAngle * k), pivots, tol).defect <
                  std::max(tol.geom, 1e-9);
    }
    if (all_close) return PorismOutcome{};
    // The matrix test passed but tracing disagrees; no start can be trusted.
    return NoSolution{};
  }

  const std::optional<Line2> line = common_line(pivots, tol);
  FiniteSolutions out;
  for (CirclePoint x : fixed_points(c, h, tol.geom, tol)) {
    x = polish(c, x, pivots, tol);
    ChordChain ch = trace_chain(c, x, pivots, tol);
    if (ch.defect >= std::max(tol.geom, 1e-9) || degenerate(c, ch, line, tol)) continue;
    const bool duplicate = std::any_of(out.solutions.begin(), out.solutions.end(),
                                       [&](const CastillonSolution& s) {
                                         return angular_distance(s.start, x) <= tol.geom;
                                       });
    if (!duplicate) out.solutions.push_back({x, std::move(ch)});
  }
  if (out.solutions.empty()) return NoSolution{};
  return out;
}

}  // namespace porism
