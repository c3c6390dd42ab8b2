#include <cmath>

#include "doctest.h"
#include "porism/castillon.hpp"
#include "porism/errors.hpp"
#include "porism/hyperbolic.hpp"
#include "porism/moebius.hpp"
#include "porism/porism.hpp"
#include "porism/random.hpp"
#include "../support.hpp"

using namespace porism;

namespace {

const Circle kUnit({0.0, 0.0}, 1.0);

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::IoError;
}

// Hyperboloid-model oracles on the unit disk. A Klein point p lifts to (p, 1); the polar of
// an exterior point q is the line with spacelike normal (q, 1).
double lorentz(Point2 p, Point2 q) { return dot(p, q) - 1.0; }

double oracle_point_line(Point2 p, Point2 q) {
  return std::asinh(std::abs(lorentz(p, q)) / std::sqrt((1 - dot(p, p)) * (dot(q, q) - 1)));
}

double oracle_normals_cos(Point2 p, Point2 q) {
  return std::abs(lorentz(p, q)) / std::sqrt((dot(p, p) - 1) * (dot(q, q) - 1));
}

Point2 exterior(Rng& rng) {
  for (;;) {
    const Point2 p = rng.in_disk(4.0);
    if (norm(p) > 1.05) return p;
  }
}

}  // namespace

TEST_CASE("klein_distance examples") {
  CHECK(klein_distance(kUnit, {0.3, 0.1}, {0.3, 0.1}) == 0.0);
  CHECK(klein_distance(kUnit, {0, 0}, {0.5, 0}) == doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-12));
  CHECK(klein_distance(kUnit, {-0.5, 0}, {0.2, 0}) == doctest::Approx(0.752039).epsilon(1e-6));
  CHECK(code_of([] { klein_distance(kUnit, {0, 0}, {2, 0}); }) == Errc::NotInterior);
}

TEST_CASE("klein_distance matches the hyperboloid formula and adds along chords") {
  Rng rng(51);
  for (int i = 0; i < 500; ++i) {
    const Circle c({rng.uniform(-2, 2), rng.uniform(-2, 2)}, rng.uniform(0.3, 2));
    const Point2 pu = rng.in_disk(0.97), qu = rng.in_disk(0.97);
    const Point2 p = from_unit(c, pu), q = from_unit(c, qu);
    const double cosh_d = (1 - dot(pu, qu)) / std::sqrt((1 - dot(pu, pu)) * (1 - dot(qu, qu)));
    CHECK(klein_distance(c, p, q) == doctest::Approx(std::acosh(cosh_d)).epsilon(1e-7));

    const double t = rng.uniform(0.05, 0.95);
    const Point2 m = p + t * (q - p);
    CHECK(klein_distance(c, p, m) + klein_distance(c, m, q) ==
          doctest::Approx(klein_distance(c, p, q)).epsilon(1e-9));
  }
}

TEST_CASE("klein_distance is preserved by boundary-determined isometries") {
  Rng rng(52);
  for (int i = 0; i < 300; ++i) {
    std::array<ProjPoint, 3> src, dst;
    for (int k = 0; k < 3; ++k) {
      src[k] = chart_pair(CirclePoint(kTwoPi * k / 3.0 + rng.uniform(-0.5, 0.5)));
      dst[k] = chart_pair(CirclePoint(kTwoPi * k / 3.0 + rng.uniform(-0.5, 0.5) + 1.0));
    }
    const MoebiusMap f = from_triples(src, dst);
    // Move an interior point as the crossing of two chords whose endpoints move by f.
    auto move = [&](Point2 p) {
      const CirclePoint x = rng.circle_point(), y = rng.circle_point();
      const CirclePoint x2 = chord_second_point(kUnit, x, p), y2 = chord_second_point(kUnit, y, p);
      return intersect(Line2::through(f.apply(x).on(kUnit), f.apply(x2).on(kUnit)),
                       Line2::through(f.apply(y).on(kUnit), f.apply(y2).on(kUnit)));
    };
    const Point2 p = rng.in_disk(0.8), q = rng.in_disk(0.8);
    const double before = klein_distance(kUnit, p, q);
    Point2 fp, fq;
    try {
      fp = move(p);
      fq = move(q);
    } catch (const Error&) {
      continue;  // the two sampled chords were parallel
    }
    if (norm(fp) > 0.999 || norm(fq) > 0.999) continue;
    CHECK(klein_distance(kUnit, fp, fq) == doctest::Approx(before).epsilon(1e-6));
  }
}

TEST_CASE("pair_invariant examples") {
  const auto a = pair_invariant(kUnit, {0, 0}, {2, 0});
  REQUIRE(std::holds_alternative<PointLine>(a));
  CHECK(std::get<PointLine>(a).distance == doctest::Approx(0.549306).epsilon(1e-6));
  const auto b = pair_invariant(kUnit, {2, 0}, {-2, 0});
  REQUIRE(std::holds_alternative<LinesDistance>(b));
  CHECK(std::get<LinesDistance>(b).distance == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  const auto c = pair_invariant(kUnit, {2, 1}, {2, -1});
  REQUIRE(std::holds_alternative<LinesAngle>(c));
  CHECK(std::get<LinesAngle>(c).angle == doctest::Approx(kPi / 3).epsilon(1e-12));
  const auto d = pair_invariant(kUnit, {0.1, 0.2}, {-0.3, 0.1});
  REQUIRE(std::holds_alternative<PointPoint>(d));
  CHECK(std::get<PointPoint>(d).distance ==
        doctest::Approx(klein_distance(kUnit, {0.1, 0.2}, {-0.3, 0.1})));
  CHECK(code_of([] { pair_invariant(kUnit, {1, 0}, {0, 0}); }) == Errc::OnCircle);
}

TEST_CASE("pair_invariant agrees with hyperboloid and conformal oracles") {
  Rng rng(53);
  int angles = 0, distances = 0;
  for (int i = 0; i < 2000; ++i) {
    const Point2 q = exterior(rng);
    if (i % 2 == 0) {
      const Point2 p = rng.in_disk(0.95);
      const auto v = pair_invariant(kUnit, p, q);
      REQUIRE(std::holds_alternative<PointLine>(v));
      CHECK(std::get<PointLine>(v).distance == doctest::Approx(oracle_point_line(p, q)).epsilon(1e-8));
      continue;
    }
    const Point2 p = exterior(rng);
    const Line2 l = Line2::through(p, q);
    if (std::abs(l.distance({0, 0}) - 1.0) < 1e-3 || distance(p, q) < 1e-3) continue;
    const auto v = pair_invariant(kUnit, p, q);
    const double k = oracle_normals_cos(p, q);
    if (l.distance({0, 0}) > 1.0) {
      REQUIRE(std::holds_alternative<LinesAngle>(v));
      const double ang = std::get<LinesAngle>(v).angle;
      CHECK(ang == doctest::Approx(std::acos(k)).epsilon(1e-7));
      CHECK(ang == doctest::Approx(oracle::conformal_polar_angle(p, q)).epsilon(1e-7));
      ++angles;
    } else {
      REQUIRE(std::holds_alternative<LinesDistance>(v));
      CHECK(std::get<LinesDistance>(v).distance == doctest::Approx(std::acosh(k)).epsilon(1e-7));
      ++distances;
    }
  }
  CHECK(angles > 100);
  CHECK(distances > 100);
}

TEST_CASE("right-angled polygons") {
  CHECK(right_angled_circumradius(5) == doctest::Approx(0.687122).epsilon(1e-6));
  CHECK(right_angled_circumradius(6) == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
  for (int n : {-1, 0, 3, 4}) {
    CHECK(code_of([n] { right_angled_polygon(n); }) == Errc::NoSuchPolygon);
  }

  Rng rng(54);
  for (int n = 5; n <= 9; ++n) {
    const auto v = right_angled_polygon(n);
    REQUIRE(v.size() == static_cast<std::size_t>(n));
    CHECK(v[0].y == 0.0);
    CHECK(v[0].x > 0.0);
    CHECK(cross(v[0], v[1]) > 0.0);
    CHECK(is_identity(holonomy(kUnit, v)));
    for (int i = 0; i < 100; ++i) CHECK(trace_chain(kUnit, rng.circle_point(), v).defect < 1e-9);

    for (int k = 0; k < n; ++k) {
      const Point2 prev = v[(k + n - 1) % n], cur = v[k], next = v[(k + 1) % n];
      const Point2 a = pole(kUnit, Line2::through(prev, cur));
      const Point2 b = pole(kUnit, Line2::through(cur, next));
      const auto ang = pair_invariant(kUnit, a, b);
      REQUIRE(std::holds_alternative<LinesAngle>(ang));
      CHECK(std::get<LinesAngle>(ang).angle == doctest::Approx(kPi / 2).epsilon(1e-9));
      CHECK(oracle_normals_cos(a, b) < 1e-9);
      // The half-turn about a vertex is the product of the reflections in its two sides.
      const MoebiusMap prod = compose(involution_of(kUnit, a), involution_of(kUnit, b));
      CHECK(prod.same_map(involution_of(kUnit, cur), 1e-9));
    }
  }
}
