#include <cmath>

#include "doctest.h"
#include "porism/errors.hpp"
#include "porism/geom.hpp"
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

}  // namespace

TEST_CASE("lines are stored normalized with a positive leading coefficient") {
  const Line2 l(0.0, -2.0, 4.0);
  CHECK(l.a() == 0.0);
  CHECK(l.b() == 1.0);
  CHECK(l.c() == -2.0);
  const Line2 m(-3.0, 4.0, 10.0);
  CHECK(m.a() == doctest::Approx(0.6));
  CHECK(m.b() == doctest::Approx(-0.8));
  CHECK(m.c() == doctest::Approx(-2.0));
  CHECK_THROWS_AS(Line2(0.0, 0.0, 1.0), Error);
  CHECK(Line2(m.a(), m.b(), m.c()) == m);
}

TEST_CASE("circles need a positive radius") {
  CHECK_THROWS_AS(Circle({0, 0}, 0.0), Error);
  CHECK_THROWS_AS(Circle({0, 0}, -1.0), Error);
}

TEST_CASE("line meets circle: the three cases") {
  SUBCASE("x-axis is a secant through theta = pi and theta = 0") {
    const auto m = line_circle_meet(kUnit, Line2(0, 1, 0));
    const auto* s = std::get_if<Secant>(&m);
    REQUIRE(s);
    CHECK(s->a.theta() == doctest::Approx(kPi));
    CHECK(s->b.theta() == doctest::Approx(0.0));
  }
  SUBCASE("y = 1 touches at the top") {
    const auto m = line_circle_meet(kUnit, Line2(0, 1, -1));
    const auto* t = std::get_if<Tangent>(&m);
    REQUIRE(t);
    CHECK(t->a.theta() == doctest::Approx(kPi / 2));
  }
  SUBCASE("x = 2 misses; witness is 2 - sqrt 3 on the axis") {
    const auto m = line_circle_meet(kUnit, Line2(1, 0, -2));
    const auto* d = std::get_if<Disjoint>(&m);
    REQUIRE(d);
    CHECK(d->witness.x == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-14));
    CHECK(std::abs(d->witness.y) < 1e-15);
    CHECK(d->perp_distance == doctest::Approx(2.0));
  }
}

TEST_CASE("disjoint witness agrees with the conformal image of the pole") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Circle c({rng.uniform(-3, 3), rng.uniform(-3, 3)}, rng.uniform(0.2, 3));
    const double phi = rng.uniform(0, kTwoPi), d = rng.uniform(1.01, 5.0) * c.radius;
    const Point2 n{std::cos(phi), std::sin(phi)};
    const oracle::Ray ray{c.center + d * n, {-n.y, n.x}};
    const Line2 l = Line2::through(ray.origin, ray.at(1.0));
    const auto m = line_circle_meet(c, l);
    const auto* dj = std::get_if<Disjoint>(&m);
    REQUIRE(dj);
    const Point2 w = oracle::disjoint_witness(c, ray);
    CHECK(distance(dj->witness, w) < 1e-12 * std::max(1.0, norm(w)));
    const double dw = distance(dj->witness, c.center);
    CHECK(dw < c.radius);
    CHECK(dw == doctest::Approx(d - std::sqrt(d * d - c.radius * c.radius)).epsilon(1e-12));
    CHECK(std::abs(cross(dj->witness - c.center, n)) < 1e-12 * c.radius);
  }
}

TEST_CASE("chord_second_point examples") {
  CHECK(chord_second_point(kUnit, CirclePoint(0.0), {0, 0}).theta() == doctest::Approx(kPi));
  CHECK(chord_second_point(kUnit, CirclePoint(0.0), {0.5, 0}).theta() == doctest::Approx(kPi));
  const CirclePoint t = chord_second_point(kUnit, CirclePoint(kPi / 3), {2, 0});
  CHECK(angular_distance(t, CirclePoint(kPi / 3)) < 1e-9);
  CHECK(code_of([] { chord_second_point(kUnit, CirclePoint(0.0), {0.0, 1.0}); }) ==
        Errc::PivotOnCircle);
}

TEST_CASE("chord_second_point matches the complex-number oracle and is an involution") {
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    const Circle c({rng.uniform(-2, 2), rng.uniform(-2, 2)}, rng.uniform(0.3, 2));
    const Point2 p = c.center + rng.in_disk(3.0 * c.radius);
    if (oracle::circle_gap(c, p) < 1e-3) continue;
    const CirclePoint x = rng.circle_point();
    const CirclePoint y = chord_second_point(c, x, p);
    CHECK(angular_distance(y, CirclePoint(oracle::chord_angle(c, x.theta(), p))) < 1e-9);
    CHECK(angular_distance(chord_second_point(c, y, p), x) < 1e-9);
    CHECK(std::abs(cross(x.on(c) - p, y.on(c) - p)) < 1e-9 * (1.0 + norm(p - c.center)));
  }
}

TEST_CASE("polarity examples") {
  const Line2 a = polarity(kUnit, {2, 0});
  CHECK(a.a() == doctest::Approx(1.0));
  CHECK(a.c() == doctest::Approx(-0.5));
  const Line2 b = polarity(kUnit, {0.5, 0});
  CHECK(b.c() == doctest::Approx(-2.0));
  const Line2 t = polarity(kUnit, CirclePoint(0.0).on(kUnit));
  CHECK(t.c() == doctest::Approx(-1.0));
  CHECK(code_of([] { polarity(kUnit, {0, 0}); }) == Errc::PolarUndefined);
  CHECK(code_of([] { pole(kUnit, Line2(1, 1, 0)); }) == Errc::PoleAtInfinity);
}

TEST_CASE("pole inverts polarity and incidence is symmetric") {
  Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const Circle c({rng.uniform(-2, 2), rng.uniform(-2, 2)}, rng.uniform(0.3, 2));
    const Point2 p = c.center + rng.in_disk(4.0 * c.radius);
    if (distance(p, c.center) < 1e-3 * c.radius) continue;
    const Point2 back = pole(c, polarity(c, p));
    CHECK(distance(back, p) <= 1e-12 * std::max({1.0, norm(p), norm(c.center)}) * 10.0);

    // q on the polar of p forces p onto the polar of q.
    const Line2 lp = polarity(c, p);
    const Point2 q = lp.at(rng.uniform(-3, 3));
    if (distance(q, c.center) < 1e-3) continue;
    CHECK(polarity(c, q).distance(p) < 1e-9 * std::max(1.0, norm(p)));
  }
}

TEST_CASE("intersect rejects parallel lines") {
  CHECK(code_of([] { intersect(Line2(0, 1, 0), Line2(0, 1, -1)); }) == Errc::OutOfRange);
  const Point2 x = intersect(Line2(1, 0, -2), Line2(0, 1, 3));
  CHECK(x.x == doctest::Approx(2.0));
  CHECK(x.y == doctest::Approx(-3.0));
}

TEST_CASE("angles reduce into [0, 2 pi)") {
  CHECK(CirclePoint(-kPi / 2).theta() == doctest::Approx(3 * kPi / 2));
  CHECK(CirclePoint(5 * kPi).theta() == doctest::Approx(kPi));
  CHECK(angular_distance(CirclePoint(0.1), CirclePoint(kTwoPi - 0.1)) == doctest::Approx(0.2));
  CHECK_THROWS_AS(CirclePoint(std::nan("")), Error);
}
