#include "porism/kernels.hpp"

#include <algorithm>

#include "porism/errors.hpp"
#include "porism/porism.hpp"

namespace porism {

namespace {

void check_pivots(const Circle& c, std::span<const Point2> pivots, const Tolerances& tol) {
  if (pivots.empty()) throw Error(Errc::ValidationError, "a chain needs at least one pivot");
  for (Point2 p : pivots)
    if (on_circle(c, p, tol)) throw Error(Errc::PivotOnCircle, "pivot lies on the circle");
}

void check_pivots(std::span<const Point3> pivots, const Tolerances& tol) {
  if (pivots.empty()) throw Error(Errc::ValidationError, "a chain needs at least one pivot");
  for (Point3 p : pivots)
    if (std::abs(norm(p) - 1.0) <= tol.geom)
      throw Error(Errc::PivotOnSphere, "pivot lies on the sphere");
}

std::vector<std::array<int, 2>> directed(std::span<const std::array<int, 2>> edges) {
  std::vector<std::array<int, 2>> d;
  for (auto [a, b] : edges) {
    d.push_back({a, b});
    d.push_back({b, a});
  }
  std::sort(d.begin(), d.end());
  return d;
}

bool probes_return(std::span<const SpherePoint> probes, std::span<const SpherePoint> images,
                   double tol) {
  for (std::size_t k = 0; k < probes.size(); ++k)
    if (geodesic_distance(probes[k], images[k]) > tol) return false;
  return true;
}

bool accept(const Cycle& w) { return cyclically_reduced(w) && pair_canonical(w) == w; }

// Depth-first extension of `walk` by one edge pair at a time, carrying the
// probe images along. Every vertex stays >= walk[0].
void extend(std::span<const Point3> vertices, std::span<const std::array<int, 2>> arcs,
            int max_len, std::span<const SpherePoint> probes, double probe_tol,
            std::vector<int>& walk, std::span<const SpherePoint> images, std::vector<Cycle>& out) {
  if (probes_return(probes, images, probe_tol) && accept(walk)) out.push_back(walk);
  if (static_cast<int>(walk.size()) + 2 > max_len) return;
  const int first = walk.front();
  std::vector<SpherePoint> next(images.size());
  for (auto [x, y] : arcs) {
    if (x < first || y < first || x == walk.back()) continue;
    for (std::size_t k = 0; k < images.size(); ++k)
      next[k] = sphere_chord_second(sphere_chord_second(images[k], vertices[x]), vertices[y]);
    walk.push_back(x);
    walk.push_back(y);
    extend(vertices, arcs, max_len, probes, probe_tol, walk, next, out);
    walk.resize(walk.size() - 2);
  }
}

std::vector<Cycle> dedupe(std::vector<Cycle> found) {
  std::sort(found.begin(), found.end());
  std::vector<Cycle> out, seen;
  for (Cycle& c : found) {
    Cycle key = canonical_cycle(c);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(std::move(key));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<double> closure_defects(const Circle& c, std::span<const Point2> pivots,
                                    std::span<const CirclePoint> starts, const Tolerances& tol) {
  check_pivots(c, pivots, tol);
  std::vector<double> out(starts.size());
  const auto n = static_cast<std::ptrdiff_t>(starts.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    CirclePoint x = starts[i];
    for (const Point2& p : pivots) x = chord_second_point(c, x, p, tol);
    out[i] = angular_distance(x, starts[i]);
  }
  return out;
}

std::vector<double> sphere_closure_defects(std::span<const Point3> pivots,
                                           std::span<const SpherePoint> starts,
                                           const Tolerances& tol) {
  check_pivots(pivots, tol);
  std::vector<double> out(starts.size());
  const auto n = static_cast<std::ptrdiff_t>(starts.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    SpherePoint x = starts[i];
    for (const Point3& p : pivots) x = sphere_chord_second(x, p, tol);
    out[i] = geodesic_distance(x, starts[i]);
  }
  return out;
}

std::vector<Cycle> closed_pair_walks(std::span<const Point3> vertices,
                                     std::span<const std::array<int, 2>> edges, int max_len,
                                     std::span<const SpherePoint> probes, double probe_tol) {
  check_pivots(vertices, {});
  const auto arcs = directed(edges);
  std::vector<std::vector<Cycle>> found(arcs.size());
  const auto n = static_cast<std::ptrdiff_t>(arcs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < n; ++t) {
    const auto [v0, v1] = arcs[t];
    if (v1 < v0 || max_len < 2) continue;
    std::vector<SpherePoint> images(probes.begin(), probes.end());
    for (auto& im : images) im = sphere_chord_second(sphere_chord_second(im, vertices[v0]), vertices[v1]);
    std::vector<int> walk{v0, v1};
    extend(vertices, arcs, max_len, probes, probe_tol, walk, images, found[t]);
  }
  std::vector<Cycle> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return dedupe(std::move(out));
}

namespace serial {

std::vector<double> closure_defects(const Circle& c, std::span<const Point2> pivots,
                                    std::span<const CirclePoint> starts, const Tolerances& tol) {
  std::vector<double> out;
  out.reserve(starts.size());
  for (CirclePoint x : starts) out.push_back(trace_chain(c, x, pivots, tol).defect);
  return out;
}

std::vector<double> sphere_closure_defects(std::span<const Point3> pivots,
                                           std::span<const SpherePoint> starts,
                                           const Tolerances& tol) {
  std::vector<double> out;
  out.reserve(starts.size());
  for (const SpherePoint& x : starts) out.push_back(sphere_trace(x, pivots, tol).defect);
  return out;
}

std::vector<Cycle> closed_pair_walks(std::span<const Point3> vertices,
                                     std::span<const std::array<int, 2>> edges, int max_len,
                                     std::span<const SpherePoint> probes, double probe_tol) {
  const auto arcs = directed(edges);
  std::vector<Cycle> out;
  // Every sequence of k edge pairs, each re-traced from scratch.
  std::vector<Cycle> level{{}};
  for (int len = 2; len <= max_len; len += 2) {
    std::vector<Cycle> next;
    for (const Cycle& w : level)
      for (auto [x, y] : arcs) {
        Cycle e = w;
        e.push_back(x);
        e.push_back(y);
        next.push_back(std::move(e));
      }
    level = std::move(next);
    for (const Cycle& w : level) {
      if (!accept(w)) continue;
      std::vector<Point3> piv;
      for (int i : w) piv.push_back(vertices[i]);
      const auto d = serial::sphere_closure_defects(piv, probes);
      if (std::all_of(d.begin(), d.end(), [&](double x) { return x <= probe_tol; })) out.push_back(w);
    }
  }
  return dedupe(std::move(out));
}

}  // namespace serial

}  // namespace porism
