#pragma once

#include <span>
#include <variant>
#include <vector>

#include "porism/moebius.hpp"
#include "porism/porism.hpp"

namespace porism {

/// I_{p_n} o ... o I_{p_1}.
MoebiusMap holonomy(const Circle& c, std::span<const Point2> pivots, const Tolerances& tol = {});

struct NoSolution {};
struct CastillonSolution {
  CirclePoint start;
  ChordChain chain;
};
struct FiniteSolutions {
  std::vector<CastillonSolution> solutions;
};
/// Every start closes.
struct PorismOutcome {};
using CastillonOutcome = std::variant<NoSolution, FiniteSolutions, PorismOutcome>;

/// Inscribed n-gons whose sides pass through the pivots in order.
///
/// Chains with two equal consecutive vertices, or (for collinear pivots)
/// a vertex on the pivot line, are not counted as solutions.
CastillonOutcome solve_castillon(const Circle& c, std::span<const Point2> pivots,
                                 const Tolerances& tol = {});

/// Line through collinear pivots, if they are collinear and not all equal.
std::optional<Line2> common_line(std::span<const Point2> pivots, const Tolerances& tol = {});

}  // namespace porism
