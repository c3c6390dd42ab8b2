#include "porism/porism.hpp"

#include <algorithm>
#include <cmath>

#include "porism/crossratio.hpp"
#include "porism/errors.hpp"

namespace porism {

ChordChain trace_chain(const Circle& c, CirclePoint x0, std::span<const Point2> pivots,
                       const Tolerances& tol) {
  if (pivots.empty()) {
    throw Error(Errc::ValidationError, "a chain needs at least one pivot");
  }
  ChordChain chain{c, x0, {pivots.begin(), pivots.end()}, {x0}, 0.0};
  chain.vertices.reserve(pivots.size() + 1);
  for (const Point2& p : pivots) {
    chain.vertices.push_back(chord_second_point(c, chain.vertices.back(), p, tol));
  }
  chain.defect = angular_distance(chain.vertices.back(), x0);
  return chain;
}

std::string_view to_string(MeetCase m) {
  switch (m) {
    case MeetCase::Secant: return "secant";
    case MeetCase::Tangent: return "tangent";
    case MeetCase::Disjoint: return "disjoint";
  }
  return "?";
}

MeetCase meet_case(const LineCircleMeet& m) {
  if (std::holds_alternative<Secant>(m)) return MeetCase::Secant;
  if (std::holds_alternative<Tangent>(m)) return MeetCase::Tangent;
  return MeetCase::Disjoint;
}

namespace {

void require_pivot(const Circle& c, const Line2& l, Point2 p, const Tolerances& tol) {
  if (on_circle(c, p, tol)) throw Error(Errc::PivotOnCircle, "pivot lies on the circle");
  if (l.distance(p) > tol.geom * std::max(1.0, norm(p))) {
    throw Error(Errc::NotOnLine, "pivot is not on the line");
  }
}

double oriented_angle(Point2 w, Point2 from, Point2 to) {
  const Point2 a = from - w, b = to - w;
  return std::atan2(cross(a, b), dot(a, b));
}

}  // namespace

ButterflyReport butterfly_check(const Circle& c, const Line2& l, Point2 p, Point2 q, Point2 r,
                                Point2 s, const Tolerances& tol) {
  for (Point2 x : {p, q, r, s}) require_pivot(c, l, x, tol);

  ButterflyReport rep;
  const LineCircleMeet meet = line_circle_meet(c, l, tol);
  rep.meet_case = meet_case(meet);
  if (const auto* sec = std::get_if<Secant>(&meet)) {
    const Point2 a = sec->a.on(c), b = sec->b.on(c);
    const AffineChart ch{l.foot({0.0, 0.0}), l.direction()};
    rep.lhs = cr_collinear(a, b, p, q, ch, tol).value();
    rep.rhs = cr_collinear(a, b, s, r, ch, tol).value();
  } else if (const auto* tan = std::get_if<Tangent>(&meet)) {
    const double a = l.coordinate(tan->a.on(c));
    auto side = [&](Point2 u, Point2 v) {
      return 1.0 / (a - l.coordinate(u)) - 1.0 / (a - l.coordinate(v));
    };
    rep.lhs = side(p, q);
    rep.rhs = side(s, r);
  } else {
    const Point2 w = std::get<Disjoint>(meet).witness;
    rep.witness = w;
    double lhs = std::fmod(oriented_angle(w, p, q) + kPi, kPi);
    if (lhs >= kPi) lhs = 0.0;
    const double rhs = oriented_angle(w, s, r);
    rep.lhs = lhs;
    rep.rhs = rhs - kPi * std::round((rhs - lhs) / kPi);
  }
  const double scale = std::max({1.0, std::abs(rep.lhs), std::abs(rep.rhs)});
  rep.satisfied = std::abs(rep.lhs - rep.rhs) <= tol.geom * scale;
  return rep;
}

bool pair_condition(const Circle& c, Point2 p, Point2 q, Point2 r, Point2 s,
                    const Tolerances& tol) {
  const MoebiusMap left = compose(involution_of(c, q, tol), involution_of(c, p, tol));
  const MoebiusMap right = compose(involution_of(c, r, tol), involution_of(c, s, tol));
  return left.same_map(right, tol.alg);
}

Point2 fourth_point(const Circle& c, const Line2& l, Point2 p, Point2 q, Point2 s,
                    CirclePoint auxiliary, const Tolerances& tol) {
  for (Point2 x : {p, q, s}) require_pivot(c, l, x, tol);
  const Point2 x = auxiliary.on(c);
  if (l.distance(x) <= 1e-6 * c.radius) {
    throw Error(Errc::DegenerateAuxiliary, "auxiliary start lies on the line");
  }
  const CirclePoint z = chord_second_point(c, chord_second_point(c, auxiliary, p, tol), q, tol);
  const CirclePoint t = chord_second_point(c, auxiliary, s, tol);
  if (angular_distance(z, t) <= 1e-6) {
    throw Error(Errc::DegenerateAuxiliary, "closing chord is undefined for this start");
  }
  const Line2 closing = Line2::through(z.on(c), t.on(c));
  if (std::abs(cross(closing.direction(), l.direction())) <= 1e-9) {
    throw Error(Errc::DegenerateAuxiliary, "closing chord is parallel to the line");
  }
  return intersect(closing, l);
}

Point2 fourth_point(const Circle& c, const Line2& l, Point2 p, Point2 q, Point2 s,
                    const Tolerances& tol) {
  constexpr double kGoldenAngle = 2.399963229728653;
  // Prefer starts whose closing chord crosses l steeply.
  std::optional<Point2> best;
  double best_score = -1.0;
  for (int k = 0; k < 12; ++k) {
    const CirclePoint aux(0.7 + kGoldenAngle * k);
    try {
      const Point2 r = fourth_point(c, l, p, q, s, aux, tol);
      const CirclePoint z =
          chord_second_point(c, chord_second_point(c, aux, p, tol), q, tol);
      const CirclePoint t = chord_second_point(c, aux, s, tol);
      const double score = std::abs(cross(Line2::through(z.on(c), t.on(c)).direction(),
                                          l.direction())) *
                           std::min(1.0, angular_distance(z, t));
      if (score > best_score) {
        best_score = score;
        best = r;
      }
      if (best_score > 0.25) break;
    } catch (const Error& e) {
      if (e.code() != Errc::DegenerateAuxiliary) throw;
    }
  }
  if (!best) throw Error(Errc::DegenerateAuxiliary, "every auxiliary start was degenerate");
  return *best;
}

}  // namespace porism
