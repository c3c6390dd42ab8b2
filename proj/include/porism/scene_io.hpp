#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "porism/geom.hpp"
#include "porism/sphere.hpp"

namespace porism {

enum class SceneMode { Circle, Sphere };

/// Input record shared by the CLI and the figure renderer.
///
/// JSON form:
///   {"mode": "circle" | "sphere",
///    "circle": {"center": [x, y], "radius": r},      circle mode only
///    "line": {"a": a, "b": b, "c": c},                optional
///    "pivots": [[x, y], ...] or [[x, y, z], ...],
///    "start": theta or [x, y, z],                     optional
///    "tol_geom": t, "tol_alg": t}                     optional
struct Scene {
  SceneMode mode = SceneMode::Circle;
  Circle circle;
  std::optional<Line2> line;
  std::vector<Point2> pivots;
  std::vector<Point3> sphere_pivots;
  std::optional<double> start_angle;
  std::optional<Point3> start_vector;
  std::optional<double> tol_geom;
  std::optional<double> tol_alg;

  Tolerances tolerances() const;
};

/// Throws Error(ParseError) with line/column or field path, or
/// Error(ValidationError) naming the violated invariant.
Scene load_scene(std::string_view text);
std::string save_scene(const Scene& scene);

/// Certified closed cycles of the right-angled dodecahedron.
///
/// JSON form:
///   {"scale": s, "dihedral_angle": rad, "vertices": [[x, y, z] x 20],
///    "max_len": L, "cycles": [[i, j, ...], ...]}
struct CycleFixture {
  double scale = 0.0;
  double dihedral = 0.0;
  std::vector<Point3> vertices;
  int max_len = 0;
  std::vector<Cycle> cycles;
};

nlohmann::ordered_json fixture_to_json(const CycleFixture& f);
CycleFixture load_fixture(std::string_view text);

/// Canonical text: two-space indentation, numeric arrays on one line,
/// doubles with 17 significant digits, trailing newline.
std::string format_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(Point2 p);
nlohmann::ordered_json to_json(Point3 p);

}  // namespace porism
