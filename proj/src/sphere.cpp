#include "porism/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "porism/errors.hpp"
#include "porism/kernels.hpp"
#include "porism/random.hpp"

namespace porism {

SpherePoint::SpherePoint(Point3 v) {
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(Errc::ValidationError, "sphere point needs a nonzero finite vector");
  }
  v_ = (1.0 / n) * v;
}

double geodesic_distance(const SpherePoint& a, const SpherePoint& b) {
  return std::atan2(norm(cross(a.vec(), b.vec())), dot(a.vec(), b.vec()));
}

SpherePoint sphere_chord_second(const SpherePoint& x, Point3 p, const Tolerances& tol) {
  if (std::abs(norm(p) - 1.0) <= tol.geom) {
    throw Error(Errc::PivotOnSphere, "pivot lies on the sphere");
  }
  const Point3 d = p - x.vec();
  const double t = -2.0 * dot(x.vec(), d) / dot(d, d);
  return SpherePoint(x.vec() + t * d);
}

SphereChain sphere_trace(const SpherePoint& x0, std::span<const Point3> pivots,
                         const Tolerances& tol) {
  if (pivots.empty()) throw Error(Errc::ValidationError, "a chain needs at least one pivot");
  SphereChain ch{x0, {x0}, 0.0};
  ch.vertices.reserve(pivots.size() + 1);
  for (const Point3& p : pivots) ch.vertices.push_back(sphere_chord_second(ch.vertices.back(), p, tol));
  ch.defect = geodesic_distance(ch.vertices.back(), x0);
  return ch;
}

std::array<Point3, 20> unit_dodecahedron() {
  constexpr double phi = std::numbers::phi;
  constexpr double iphi = 1.0 / phi;
  const double s = 1.0 / std::sqrt(3.0);
  std::array<Point3, 20> v{};
  int k = 0;
  for (double x : {-1.0, 1.0})
    for (double y : {-1.0, 1.0})
      for (double z : {-1.0, 1.0}) v[k++] = s * Point3{x, y, z};
  for (double a : {-1.0, 1.0}) {
    for (double b : {-1.0, 1.0}) {
      v[k++] = s * Point3{0.0, a * iphi, b * phi};
      v[k++] = s * Point3{a * iphi, b * phi, 0.0};
      v[k++] = s * Point3{b * phi, 0.0, a * iphi};
    }
  }
  return v;
}

std::vector<std::array<int, 2>> dodecahedron_edges() {
  const auto v = unit_dodecahedron();
  double shortest = 10.0;
  for (int i = 0; i < 20; ++i)
    for (int j = i + 1; j < 20; ++j) shortest = std::min(shortest, norm(v[i] - v[j]));
  std::vector<std::array<int, 2>> e;
  for (int i = 0; i < 20; ++i)
    for (int j = i + 1; j < 20; ++j)
      if (norm(v[i] - v[j]) < shortest * (1.0 + 1e-9)) e.push_back({i, j});
  return e;
}

namespace {

// Outward unit face normals: the icosahedron directions.
std::array<Point3, 12> face_normals() {
  constexpr double phi = std::numbers::phi;
  std::array<Point3, 12> n{};
  int k = 0;
  for (double a : {-1.0, 1.0}) {
    for (double b : {-1.0, 1.0}) {
      n[k++] = Point3{0.0, a * phi, b};
      n[k++] = Point3{b, 0.0, a * phi};
      n[k++] = Point3{a * phi, b, 0.0};
    }
  }
  for (Point3& x : n) x = (1.0 / norm(x)) * x;
  return n;
}

}  // namespace

std::vector<std::array<int, 5>> dodecahedron_faces() {
  const auto v = unit_dodecahedron();
  std::vector<std::array<int, 5>> faces;
  for (const Point3& n : face_normals()) {
    double top = -2.0;
    for (const Point3& p : v) top = std::max(top, dot(n, p));
    std::vector<int> idx;
    for (int i = 0; i < 20; ++i)
      if (dot(n, v[i]) > top - 1e-9) idx.push_back(i);
    // order around the normal
    const Point3 e1 = (1.0 / norm(v[idx[0]] - top * n)) * (v[idx[0]] - top * n);
    const Point3 e2 = cross(n, e1);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return std::atan2(dot(v[a], e2), dot(v[a], e1)) < std::atan2(dot(v[b], e2), dot(v[b], e1));
    });
    faces.push_back({idx[0], idx[1], idx[2], idx[3], idx[4]});
  }
  return faces;
}

double dihedral_angle(double scale) {
  if (!(scale > 0.0 && scale < 1.0)) {
    throw Error(Errc::OutOfRange, "dodecahedron scale must lie in (0, 1)");
  }
  const auto normals = face_normals();
  const auto v = unit_dodecahedron();
  double inradius = -1.0;
  for (const Point3& p : v) inradius = std::max(inradius, dot(normals[0], p));
  double adjacent = -2.0;
  for (std::size_t j = 1; j < normals.size(); ++j) {
    const double c = dot(normals[0], normals[j]);
    if (c < 1.0 - 1e-9) adjacent = std::max(adjacent, c);
  }
  // <N_i, N_j> / <N, N> for N = (n, h) under x.y - t s
  const double h2 = std::pow(scale * inradius, 2);
  const double cos_normals = (adjacent - h2) / (1.0 - h2);
  return kPi - std::acos(std::clamp(cos_normals, -1.0, 1.0));
}

double right_angle_scale() {
  double lo = 1e-6, hi = 1.0 - 1e-12;
  while (hi - lo > 1e-16) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (dihedral_angle(mid) > 0.5 * kPi ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::array<Point3, 20> right_angled_dodecahedron() {
  const double s = right_angle_scale();
  auto v = unit_dodecahedron();
  for (Point3& p : v) p = s * p;
  return v;
}

namespace {

Cycle smallest_rotation(const Cycle& c, std::size_t step) {
  Cycle best = c;
  Cycle rev(c.rbegin(), c.rend());
  if (step == 2 && c.size() % 2 != 0) step = 1;
  for (const Cycle* base : std::array<const Cycle*, 2>{&c, &rev}) {
    Cycle r = *base;
    for (std::size_t k = 0; k < r.size(); k += step) {
      if (r < best) best = r;
      std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(step), r.end());
    }
  }
  return best;
}

}  // namespace

Cycle canonical_cycle(const Cycle& c) { return c.empty() ? c : smallest_rotation(c, 1); }
Cycle pair_canonical(const Cycle& c) { return c.empty() ? c : smallest_rotation(c, 2); }

bool cyclically_reduced(const Cycle& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] == c[(i + 1) % c.size()]) return false;
  return true;
}

std::vector<Cycle> find_closed_cycles(std::span<const Point3> vertices, int max_len,
                                      double closure_tol, int certify_starts,
                                      std::uint64_t seed) {
  if (max_len < 2 || max_len % 2 != 0) {
    throw Error(Errc::ValidationError, "max_len must be even and at least 2");
  }
  // Edges of the polytope: pairs at the shortest distance.
  double shortest = INFINITY;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      shortest = std::min(shortest, norm(vertices[i] - vertices[j]));
  std::vector<std::array<int, 2>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (norm(vertices[i] - vertices[j]) < shortest * (1.0 + 1e-9))
        edges.push_back({static_cast<int>(i), static_cast<int>(j)});

  // Three fixed, pairwise far probes screen the walks; survivors are
  // certified from random starts.
  const std::array<SpherePoint, 3> probes{SpherePoint({0.31, 0.83, -0.46}),
                                          SpherePoint({-0.72, 0.12, 0.68}),
                                          SpherePoint({0.45, -0.61, 0.65})};
  std::vector<Cycle> candidates = closed_pair_walks(vertices, edges, max_len, probes, 1e-6);

  Rng rng(seed);
  std::vector<SpherePoint> starts;
  for (int k = 0; k < certify_starts; ++k) {
    const double z = rng.uniform(-1.0, 1.0), a = rng.uniform(0.0, kTwoPi);
    const double r = std::sqrt(1.0 - z * z);
    starts.emplace_back(Point3{r * std::cos(a), r * std::sin(a), z});
  }
  std::vector<Cycle> out;
  for (const Cycle& cyc : candidates) {
    std::vector<Point3> piv;
    for (int i : cyc) piv.push_back(vertices[i]);
    const auto d = sphere_closure_defects(piv, starts);
    if (std::all_of(d.begin(), d.end(), [&](double x) { return x < closure_tol; })) {
      out.push_back(cyc);
    }
  }
  return out;
}

}  // namespace porism
