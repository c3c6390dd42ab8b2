#pragma once

#include <optional>
#include <span>
#include <vector>

#include "porism/geom.hpp"
#include "porism/moebius.hpp"

namespace porism {

/// Chain of chords from `start` through each pivot in turn.
/// vertices[k + 1] is the other end of the chord from vertices[k] through
/// pivots[k]; defect is the angular distance from the last vertex back to start.
struct ChordChain {
  Circle circle;
  CirclePoint start;
  std::vector<Point2> pivots;
  std::vector<CirclePoint> vertices;
  double defect = 0.0;

  bool closed(double tol) const { return defect < tol; }
};

ChordChain trace_chain(const Circle& c, CirclePoint x0, std::span<const Point2> pivots,
                       const Tolerances& tol = {});

enum class MeetCase { Secant, Tangent, Disjoint };

/// Two sides of the closing condition for the chain p, q, r, s on the line l.
///
/// Secant:   lhs = cr(a,b;p,q),                rhs = cr(a,b;s,r)
/// Tangent:  lhs = 1/(a-p) - 1/(a-q),          rhs = 1/(a-s) - 1/(a-r)
///           with signed coordinates along the oriented line
/// Disjoint: lhs = angle p-w-q, rhs = angle s-w-r at the witness w, as
///           oriented angles modulo pi; lhs is in [0, pi) and rhs is the
///           representative nearest to lhs.
struct ButterflyReport {
  MeetCase meet_case = MeetCase::Secant;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  std::optional<Point2> witness;
};

ButterflyReport butterfly_check(const Circle& c, const Line2& l, Point2 p, Point2 q, Point2 r,
                                Point2 s, const Tolerances& tol = {});

/// I_q o I_p == I_r o I_s as projective maps, within tol.alg.
bool pair_condition(const Circle& c, Point2 p, Point2 q, Point2 r, Point2 s,
                    const Tolerances& tol = {});

/// The point r on l for which the chain p, q, r, s closes, built with a ruler
/// from an auxiliary start x: r is where the chord from I_q(I_p(x)) to I_s(x)
/// meets l.
Point2 fourth_point(const Circle& c, const Line2& l, Point2 p, Point2 q, Point2 s,
                    const Tolerances& tol = {});
Point2 fourth_point(const Circle& c, const Line2& l, Point2 p, Point2 q, Point2 s,
                    CirclePoint auxiliary, const Tolerances& tol = {});

std::string_view to_string(MeetCase m);
MeetCase meet_case(const LineCircleMeet& m);

}  // namespace porism
