#pragma once

#include <string>
#include <vector>

#include "porism/scene_io.hpp"

namespace porism {

/// Analysis results drawn on top of a scene.
struct Figure {
  /// Traced chains in scene coordinates, one polyline each.
  std::vector<std::vector<Point2>> chains;
  std::vector<std::vector<Point3>> sphere_chains;
  /// Short annotation, e.g. "closed (defect 1.2e-16)".
  std::string verdict;
};

/// Deterministic SVG, y axis pointing up. Circle scenes draw the circle,
/// the line, labeled pivots and the chains; sphere scenes draw the xy and
/// xz orthographic projections side by side.
std::string render_svg(const Scene& scene, const Figure& figure);

}  // namespace porism
