#include "porism/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "porism/castillon.hpp"
#include "porism/errors.hpp"
#include "porism/hyperbolic.hpp"
#include "porism/kernels.hpp"
#include "porism/porism.hpp"
#include "porism/random.hpp"
#include "porism/scene_io.hpp"
#include "porism/sphere.hpp"
#include "porism/svg.hpp"

namespace porism {

using nlohmann::ordered_json;

namespace {

struct Globals {
  std::optional<double> tol_geom;
  std::optional<double> tol_alg;
  std::uint64_t seed = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write " + path);
  out << text;
}

Tolerances tolerances(const Scene& s, const Globals& g) {
  Tolerances t = s.tolerances();
  if (g.tol_geom) t.geom = *g.tol_geom;
  if (g.tol_alg) t.alg = *g.tol_alg;
  if (!(t.geom > 0.0) || !(t.alg > 0.0)) throw Error(Errc::UsageError, "tolerances must be positive");
  return t;
}

void require_circle(const Scene& s, const char* command) {
  if (s.mode != SceneMode::Circle) {
    throw Error(Errc::UnsupportedMode, std::string(command) + " needs a circle-mode scene");
  }
}

ordered_json chain_points(const Circle& c, const std::vector<CirclePoint>& v) {
  ordered_json a = ordered_json::array();
  for (CirclePoint x : v) a.push_back(to_json(x.on(c)));
  return a;
}

ordered_json chain_angles(const std::vector<CirclePoint>& v) {
  ordered_json a = ordered_json::array();
  for (CirclePoint x : v) a.push_back(x.theta());
  return a;
}

std::vector<Point2> polyline(const Circle& c, const std::vector<CirclePoint>& v) {
  std::vector<Point2> out;
  for (CirclePoint x : v) out.push_back(x.on(c));
  return out;
}

std::string class_name(const MoebiusClass& m) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Identity>) return "identity";
        if constexpr (std::is_same_v<T, Elliptic>) return "elliptic";
        if constexpr (std::is_same_v<T, Parabolic>) return "parabolic";
        if constexpr (std::is_same_v<T, Hyperbolic>) return "hyperbolic";
        return "reversing";
      },
      m);
}

std::vector<CirclePoint> random_starts(Rng& rng, int n) {
  std::vector<CirclePoint> s;
  for (int i = 0; i < n; ++i) s.push_back(rng.circle_point());
  return s;
}

std::string verdict_text(bool closed, double defect) {
  char verdict_buf[64];
  std::snprintf(verdict_buf, sizeof verdict_buf, "%s (defect %.3g)", closed ? "closed" : "open",
                defect);
  return verdict_buf;
}

int cmd_trace(const Globals& g, const std::string& scene_path, std::optional<double> start,
              const std::string& svg_path, std::ostream& out) {
  const Scene s = load_scene(read_file(scene_path));
  const Tolerances tol = tolerances(s, g);
  Rng rng(g.seed);
  ordered_json rep;
  Figure fig;
  bool closed = false;
  if (s.mode == SceneMode::Circle) {
    const CirclePoint x0(start ? *start : s.start_angle ? *s.start_angle : rng.uniform(0.0, kTwoPi));
    const ChordChain ch = trace_chain(s.circle, x0, s.pivots, tol);
    closed = ch.closed(tol.geom);
    rep["mode"] = "circle";
    rep["start"] = x0.theta();
    rep["vertices"] = chain_angles(ch.vertices);
    rep["points"] = chain_points(s.circle, ch.vertices);
    rep["defect"] = ch.defect;
    rep["closed"] = closed;
    fig.chains.push_back(polyline(s.circle, ch.vertices));
    fig.verdict = verdict_text(closed, ch.defect);
  } else {
    if (start) throw Error(Errc::UsageError, "--start takes an angle; sphere scenes set start in the scene");
    Point3 v = s.start_vector ? *s.start_vector : Point3{};
    if (!s.start_vector) {
      const double z = rng.uniform(-1.0, 1.0), a = rng.uniform(0.0, kTwoPi);
      v = {std::sqrt(1.0 - z * z) * std::cos(a), std::sqrt(1.0 - z * z) * std::sin(a), z};
    }
    const SphereChain ch = sphere_trace(SpherePoint(v), s.sphere_pivots, tol);
    closed = ch.defect < tol.geom;
    rep["mode"] = "sphere";
    rep["start"] = to_json(ch.start.vec());
    rep["vertices"] = ordered_json::array();
    std::vector<Point3> pts;
    for (const SpherePoint& p : ch.vertices) {
      rep["vertices"].push_back(to_json(p.vec()));
      pts.push_back(p.vec());
    }
    rep["defect"] = ch.defect;
    rep["closed"] = closed;
    fig.sphere_chains.push_back(pts);
    fig.verdict = verdict_text(closed, ch.defect);
  }
  if (!svg_path.empty()) write_file(svg_path, render_svg(s, fig));
  out << format_json(rep);
  return closed ? kSatisfied : kNotSatisfied;
}

Line2 scene_line(const Scene& s, std::span<const Point2> pts, const Tolerances& tol) {
  if (s.line) return *s.line;
  if (auto l = common_line(pts, tol)) return *l;
  throw Error(Errc::NotCollinear, "pivots are not collinear and the scene has no line");
}

int cmd_check(const Globals& g, const std::string& scene_path, std::ostream& out) {
  const Scene s = load_scene(read_file(scene_path));
  require_circle(s, "check");
  const Tolerances tol = tolerances(s, g);
  if (s.pivots.size() != 4) {
    throw Error(Errc::ValidationError, "check needs exactly four pivots p, q, r, s");
  }
  const auto& p = s.pivots;
  const Line2 l = scene_line(s, p, tol);
  const ButterflyReport b = butterfly_check(s.circle, l, p[0], p[1], p[2], p[3], tol);
  const bool pair = pair_condition(s.circle, p[0], p[1], p[2], p[3], tol);
  Rng rng(g.seed);
  const auto starts = random_starts(rng, 16);
  const auto defects = closure_defects(s.circle, p, starts, tol);
  const double worst = *std::max_element(defects.begin(), defects.end());

  ordered_json rep;
  rep["case"] = std::string(to_string(b.meet_case));
  rep["lhs"] = b.lhs;
  rep["rhs"] = b.rhs;
  rep["satisfied"] = b.satisfied;
  rep["witness"] = b.witness ? to_json(*b.witness) : ordered_json(nullptr);
  rep["pair_condition"] = pair;
  rep["max_defect"] = worst;
  rep["universal_closure"] = worst < std::max(tol.geom, 1e-9);
  out << format_json(rep);
  return b.satisfied ? kSatisfied : kNotSatisfied;
}

ordered_json survey_odd_exterior(const Globals& g, int count, const Tolerances& tol) {
  Rng rng(g.seed);
  const Circle unit({0.0, 0.0}, 1.0);
  int with_solutions = 0, none = 0, porisms = 0;
  for (int i = 0; i < count; ++i) {
    const int n = rng.canonical() < 0.5 ? 3 : 5;
    const double dir = rng.uniform(0.0, kTwoPi);
    const double dist = rng.uniform(1.2, 3.0);
    const Line2 l(std::cos(dir), std::sin(dir), -dist);
    std::vector<Point2> piv;
    for (int k = 0; k < n; ++k) piv.push_back(l.at(rng.uniform(-3.0, 3.0)));
    const CastillonOutcome o = solve_castillon(unit, piv, tol);
    if (std::holds_alternative<FiniteSolutions>(o)) ++with_solutions;
    if (std::holds_alternative<NoSolution>(o)) ++none;
    if (std::holds_alternative<PorismOutcome>(o)) ++porisms;
  }
  ordered_json rep;
  rep["experiment"] = "odd collinear exterior pivots, line disjoint from the circle";
  rep["instances"] = count;
  rep["with_solutions"] = with_solutions;
  rep["no_solution"] = none;
  rep["porism"] = porisms;
  return rep;
}

int cmd_castillon(const Globals& g, const std::string& scene_path, int survey, std::ostream& out) {
  if (survey > 0) {
    out << format_json(survey_odd_exterior(g, survey, tolerances(Scene{}, g)));
    return kSatisfied;
  }
  if (scene_path.empty()) throw Error(Errc::UsageError, "castillon needs --scene");
  const Scene s = load_scene(read_file(scene_path));
  require_circle(s, "castillon");
  const Tolerances tol = tolerances(s, g);
  const MoebiusMap h = holonomy(s.circle, s.pivots, tol);
  const CastillonOutcome o = solve_castillon(s.circle, s.pivots, tol);

  ordered_json rep;
  rep["holonomy"] = {{"matrix", ordered_json::array({h.m00(), h.m01(), h.m10(), h.m11()})},
                     {"class", class_name(classify(h, tol.geom, tol))}};
  int code = kSatisfied;
  if (std::holds_alternative<PorismOutcome>(o)) {
    rep["outcome"] = "porism";
  } else if (const auto* f = std::get_if<FiniteSolutions>(&o)) {
    rep["outcome"] = "points";
    rep["solutions"] = ordered_json::array();
    for (const auto& sol : f->solutions) {
      rep["solutions"].push_back({{"start", sol.start.theta()},
                                  {"vertices", chain_points(s.circle, sol.chain.vertices)},
                                  {"defect", sol.chain.defect}});
    }
  } else {
    rep["outcome"] = "none";
    code = kNotSatisfied;
  }
  out << format_json(rep);
  return code;
}

int cmd_fourth_point(const Globals& g, const std::string& scene_path, int ip, int iq, int is,
                     std::ostream& out) {
  const Scene s = load_scene(read_file(scene_path));
  require_circle(s, "fourth-point");
  const Tolerances tol = tolerances(s, g);
  const int n = static_cast<int>(s.pivots.size());
  for (int i : {ip, iq, is}) {
    if (i < 0 || i >= n) throw Error(Errc::UsageError, "pivot index out of range");
  }
  const Point2 p = s.pivots[ip], q = s.pivots[iq], sp = s.pivots[is];
  const std::array<Point2, 3> three{p, q, sp};
  const Line2 l = scene_line(s, three, tol);
  const Point2 r = fourth_point(s.circle, l, p, q, sp, tol);
  ordered_json rep;
  rep["r"] = to_json(r);
  if (!on_circle(s.circle, r, tol)) {
    const ButterflyReport b = butterfly_check(s.circle, l, p, q, r, sp, tol);
    rep["case"] = std::string(to_string(b.meet_case));
    rep["satisfied"] = b.satisfied;
  }
  out << format_json(rep);
  return kSatisfied;
}

int cmd_polygon(int n, const std::string& out_path, std::ostream& out) {
  Scene s;
  s.circle = Circle({0.0, 0.0}, 1.0);
  for (Point2 v : right_angled_polygon(n)) s.pivots.push_back(v);
  const std::string text = save_scene(s);
  if (!out_path.empty()) write_file(out_path, text);
  out << text;
  return kSatisfied;
}

int cmd_dodecahedron(const Globals& g, int max_len, const std::string& out_path, std::ostream& out) {
  CycleFixture f;
  f.scale = right_angle_scale();
  f.dihedral = dihedral_angle(f.scale);
  for (Point3 p : right_angled_dodecahedron()) f.vertices.push_back(p);
  f.max_len = max_len;
  if (max_len > 0) {
    if (max_len % 2 != 0) throw Error(Errc::UsageError, "--cycles needs an even length");
    f.cycles = find_closed_cycles(f.vertices, max_len, 1e-8, 10, g.seed);
  }
  const std::string text = format_json(fixture_to_json(f));
  if (!out_path.empty()) write_file(out_path, text);
  out << text;
  return kSatisfied;
}

void report_error(std::ostream& err, Errc code, const std::string& message) {
  ordered_json e;
  e["error"] = std::string(error_code_name(code));
  e["message"] = message;
  err << format_json(e);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chord-chain porisms, Castillon's problem and their hyperbolic certificates", "porism"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  double tol_geom = 0.0, tol_alg = 0.0;
  auto* o_geom = app.add_option("--tol-geom", tol_geom, "absolute geometric tolerance");
  auto* o_alg = app.add_option("--tol-alg", tol_alg, "relative algebraic tolerance");
  app.add_option("--seed", g.seed, "seed for randomized samples");

  std::string scene_path, svg_path, out_path;
  double start = 0.0;
  int ip = -1, iq = -1, is = -1, n = 0, max_len = 0, survey = 0;

  auto* trace = app.add_subcommand("trace", "trace the chain of chords");
  trace->add_option("--scene", scene_path)->required();
  auto* o_start = trace->add_option("--start", start, "start angle in radians");
  trace->add_option("--svg", svg_path, "write a figure");

  auto* check = app.add_subcommand("check", "closing conditions for four collinear pivots");
  check->add_option("--scene", scene_path)->required();

  auto* cast = app.add_subcommand("castillon", "solve Castillon's problem");
  cast->add_option("--scene", scene_path);
  cast->add_option("--survey-odd-exterior", survey,
                   "run the odd exterior collinear experiment on N random scenes");

  auto* fourth = app.add_subcommand("fourth-point", "ruler construction of the fourth pivot");
  fourth->add_option("--scene", scene_path)->required();
  fourth->add_option("--p", ip)->required();
  fourth->add_option("--q", iq)->required();
  fourth->add_option("--s", is)->required();

  auto* poly = app.add_subcommand("polygon", "right-angled regular polygon scene");
  poly->add_option("--n", n)->required();
  poly->add_option("--out", out_path);

  auto* dodeca = app.add_subcommand("dodecahedron", "right-angled dodecahedron and closed cycles");
  dodeca->add_option("--cycles", max_len, "search closed cycles up to this even length");
  dodeca->add_option("--out", out_path);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSatisfied;
  } catch (const CLI::ParseError& e) {
    report_error(err, Errc::UsageError, e.what());
    return kInputError;
  }
  if (o_geom->count()) g.tol_geom = tol_geom;
  if (o_alg->count()) g.tol_alg = tol_alg;

  try {
    if (trace->parsed()) {
      return cmd_trace(g, scene_path, o_start->count() ? std::optional(start) : std::nullopt,
                       svg_path, out);
    }
    if (check->parsed()) return cmd_check(g, scene_path, out);
    if (cast->parsed()) return cmd_castillon(g, scene_path, survey, out);
    if (fourth->parsed()) return cmd_fourth_point(g, scene_path, ip, iq, is, out);
    if (poly->parsed()) return cmd_polygon(n, out_path, out);
    if (dodeca->parsed()) return cmd_dodecahedron(g, max_len, out_path, out);
  } catch (const Error& e) {
    report_error(err, e.code(), e.what());
    return kInputError;
  }
  return kInputError;
}

}  // namespace porism
