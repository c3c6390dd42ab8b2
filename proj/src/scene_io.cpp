#include "porism/scene_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "porism/errors.hpp"

namespace porism {

using nlohmann::ordered_json;

Tolerances Scene::tolerances() const {
  Tolerances t;
  if (tol_geom) t.geom = *tol_geom;
  if (tol_alg) t.alg = *tol_alg;
  return t;
}

namespace {

std::string number(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool scalar(const ordered_json& j) { return !j.is_object() && !j.is_array(); }

void write(std::ostringstream& os, const ordered_json& j, int indent) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << inner << ordered_json(it.key()).dump() << ": ";
      write(os, it.value(), indent + 2);
    }
    os << "\n" << pad << "}";
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), scalar);
    if (j.empty()) {
      os << "[]";
    } else if (flat) {
      os << "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        write(os, j[i], indent);
      }
      os << "]";
    } else {
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << inner;
        write(os, j[i], indent + 2);
      }
      os << "\n" << pad << "]";
    }
  } else if (j.is_number_float()) {
    os << number(j.get<double>());
  } else {
    os << j.dump();
  }
}

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw Error(Errc::ParseError, "field '" + path + "': " + what);
}

double get_number(const ordered_json& j, const std::string& path) {
  if (!j.is_number()) field_error(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) field_error(path, "expected a finite number");
  return v;
}

std::vector<double> get_vector(const ordered_json& j, std::size_t n, const std::string& path) {
  if (!j.is_array() || j.size() != n) {
    field_error(path, "expected an array of " + std::to_string(n) + " numbers");
  }
  std::vector<double> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(get_number(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

ordered_json parse(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(Errc::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
}

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::ValidationError, what); }

}  // namespace

ordered_json to_json(Point2 p) { return ordered_json::array({p.x, p.y}); }
ordered_json to_json(Point3 p) { return ordered_json::array({p.x, p.y, p.z}); }

std::string format_json(const ordered_json& j) {
  std::ostringstream os;
  write(os, j, 0);
  os << "\n";
  return os.str();
}

Scene load_scene(std::string_view text) {
  const ordered_json j = parse(text);
  if (!j.is_object()) field_error("$", "expected an object");
  static const std::vector<std::string> known{"mode", "circle", "line", "pivots",
                                              "start", "tol_geom", "tol_alg"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(known.begin(), known.end(), it.key()) == known.end()) {
      field_error(it.key(), "unknown field");
    }
  }

  Scene s;
  if (!j.contains("mode") || !j["mode"].is_string()) field_error("mode", "expected \"circle\" or \"sphere\"");
  const std::string mode = j["mode"].get<std::string>();
  if (mode == "circle") {
    s.mode = SceneMode::Circle;
  } else if (mode == "sphere") {
    s.mode = SceneMode::Sphere;
  } else {
    field_error("mode", "expected \"circle\" or \"sphere\"");
  }

  if (s.mode == SceneMode::Circle) {
    if (!j.contains("circle") || !j["circle"].is_object()) field_error("circle", "expected an object");
    const auto& c = j["circle"];
    if (!c.contains("center")) field_error("circle.center", "missing");
    if (!c.contains("radius")) field_error("circle.radius", "missing");
    const auto center = get_vector(c["center"], 2, "circle.center");
    const double radius = get_number(c["radius"], "circle.radius");
    if (!(radius > 0.0)) invalid("circle.radius must be positive");
    s.circle = Circle({center[0], center[1]}, radius);
  } else if (j.contains("circle")) {
    field_error("circle", "sphere scenes use the unit sphere and take no circle");
  }

  if (j.contains("line")) {
    const auto& l = j["line"];
    if (!l.is_object()) field_error("line", "expected an object");
    for (const char* k : {"a", "b", "c"})
      if (!l.contains(k)) field_error(std::string("line.") + k, "missing");
    const double a = get_number(l["a"], "line.a"), b = get_number(l["b"], "line.b");
    const double c = get_number(l["c"], "line.c");
    if (a == 0.0 && b == 0.0) invalid("line needs (a, b) != (0, 0)");
    if (s.mode == SceneMode::Sphere) field_error("line", "sphere scenes take no line");
    s.line = Line2(a, b, c);
  }

  for (const char* k : {"tol_geom", "tol_alg"}) {
    if (j.contains(k)) {
      const double t = get_number(j[k], k);
      if (!(t > 0.0)) invalid(std::string(k) + " must be positive");
      (std::string(k) == "tol_geom" ? s.tol_geom : s.tol_alg) = t;
    }
  }
  const Tolerances tol = s.tolerances();

  if (!j.contains("pivots") || !j["pivots"].is_array()) field_error("pivots", "expected an array");
  const auto& piv = j["pivots"];
  for (std::size_t i = 0; i < piv.size(); ++i) {
    const std::string path = "pivots[" + std::to_string(i) + "]";
    if (s.mode == SceneMode::Circle) {
      if (piv[i].is_array() && piv[i].size() == 3) {
        invalid(path + " has 3 coordinates but the scene is in circle mode");
      }
      const auto v = get_vector(piv[i], 2, path);
      const Point2 p{v[0], v[1]};
      if (on_circle(s.circle, p, tol)) invalid(path + " lies on the circle");
      s.pivots.push_back(p);
    } else {
      if (piv[i].is_array() && piv[i].size() == 2) {
        invalid(path + " has 2 coordinates but the scene is in sphere mode");
      }
      const auto v = get_vector(piv[i], 3, path);
      const Point3 p{v[0], v[1], v[2]};
      if (std::abs(norm(p) - 1.0) <= tol.geom) invalid(path + " lies on the sphere");
      s.sphere_pivots.push_back(p);
    }
  }

  if (j.contains("start")) {
    if (s.mode == SceneMode::Circle) {
      s.start_angle = get_number(j["start"], "start");
    } else {
      const auto v = get_vector(j["start"], 3, "start");
      const Point3 p{v[0], v[1], v[2]};
      if (norm(p) == 0.0) invalid("start must be a nonzero vector");
      s.start_vector = p;
    }
  }
  return s;
}

std::string save_scene(const Scene& s) {
  ordered_json j;
  j["mode"] = s.mode == SceneMode::Circle ? "circle" : "sphere";
  if (s.mode == SceneMode::Circle) {
    j["circle"] = {{"center", to_json(s.circle.center)}, {"radius", s.circle.radius}};
  }
  if (s.line) j["line"] = {{"a", s.line->a()}, {"b", s.line->b()}, {"c", s.line->c()}};
  j["pivots"] = ordered_json::array();
  if (s.mode == SceneMode::Circle) {
    for (Point2 p : s.pivots) j["pivots"].push_back(to_json(p));
  } else {
    for (Point3 p : s.sphere_pivots) j["pivots"].push_back(to_json(p));
  }
  if (s.start_angle) j["start"] = *s.start_angle;
  if (s.start_vector) j["start"] = to_json(*s.start_vector);
  if (s.tol_geom) j["tol_geom"] = *s.tol_geom;
  if (s.tol_alg) j["tol_alg"] = *s.tol_alg;
  return format_json(j);
}

ordered_json fixture_to_json(const CycleFixture& f) {
  ordered_json j;
  j["scale"] = f.scale;
  j["dihedral_angle"] = f.dihedral;
  j["vertices"] = ordered_json::array();
  for (Point3 p : f.vertices) j["vertices"].push_back(to_json(p));
  j["max_len"] = f.max_len;
  j["cycles"] = ordered_json::array();
  for (const Cycle& c : f.cycles) j["cycles"].push_back(c);
  return j;
}

CycleFixture load_fixture(std::string_view text) {
  const ordered_json j = parse(text);
  if (!j.is_object()) field_error("$", "expected an object");
  CycleFixture f;
  for (const char* k : {"scale", "dihedral_angle", "vertices", "max_len", "cycles"})
    if (!j.contains(k)) field_error(k, "missing");
  f.scale = get_number(j["scale"], "scale");
  f.dihedral = get_number(j["dihedral_angle"], "dihedral_angle");
  if (!j["vertices"].is_array()) field_error("vertices", "expected an array");
  for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
    const auto v = get_vector(j["vertices"][i], 3, "vertices[" + std::to_string(i) + "]");
    f.vertices.push_back({v[0], v[1], v[2]});
  }
  if (!j["max_len"].is_number_integer()) field_error("max_len", "expected an integer");
  f.max_len = j["max_len"].get<int>();
  if (!j["cycles"].is_array()) field_error("cycles", "expected an array");
  for (std::size_t i = 0; i < j["cycles"].size(); ++i) {
    const auto& c = j["cycles"][i];
    const std::string path = "cycles[" + std::to_string(i) + "]";
    if (!c.is_array()) field_error(path, "expected an array of vertex indices");
    Cycle cyc;
    for (const auto& x : c) {
      if (!x.is_number_integer()) field_error(path, "expected integer vertex indices");
      const int k = x.get<int>();
      if (k < 0 || k >= static_cast<int>(f.vertices.size())) invalid(path + " has an index out of range");
      cyc.push_back(k);
    }
    f.cycles.push_back(std::move(cyc));
  }
  return f;
}

}  // namespace porism
