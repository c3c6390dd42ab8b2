#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "porism/geom.hpp"

namespace porism {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Point3 operator*(double s, Point3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Point3&, const Point3&) = default;
};

inline double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Point3 cross(Point3 a, Point3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Point3 a) { return std::sqrt(dot(a, a)); }

/// Unit vector on S^2.
class SpherePoint {
 public:
  SpherePoint() = default;
  /// Normalizes; throws ValidationError for the zero vector.
  explicit SpherePoint(Point3 v);
  const Point3& vec() const { return v_; }

 private:
  Point3 v_{1.0, 0.0, 0.0};
};

double geodesic_distance(const SpherePoint& a, const SpherePoint& b);

SpherePoint sphere_chord_second(const SpherePoint& x, Point3 p, const Tolerances& tol = {});

struct SphereChain {
  SpherePoint start;
  std::vector<SpherePoint> vertices;
  double defect = 0.0;
};

SphereChain sphere_trace(const SpherePoint& x0, std::span<const Point3> pivots,
                         const Tolerances& tol = {});

/// Regular dodecahedron with unit circumradius: the (+-1,+-1,+-1),
/// (0,+-1/phi,+-phi) orbit divided by sqrt(3).
std::array<Point3, 20> unit_dodecahedron();
/// The 30 edges as index pairs (i < j).
std::vector<std::array<int, 2>> dodecahedron_edges();
/// The 12 faces, each as 5 vertex indices in cyclic order.
std::vector<std::array<int, 5>> dodecahedron_faces();

/// Dihedral angle of the regular dodecahedron of Klein-ball circumradius
/// `scale`, from the Lorentzian normals (n, h) of its face planes n.x = h.
double dihedral_angle(double scale);
/// Circumradius at which every dihedral angle is pi/2 (bisection).
double right_angle_scale();
std::array<Point3, 20> right_angled_dodecahedron();

/// A closed composition of vertex involutions, as vertex indices.
using Cycle = std::vector<int>;

/// Closed compositions of vertex involutions of even length <= max_len
/// built from edge pairs: (c[0], c[1]), (c[2], c[3]), ... are polytope
/// edges (pairs of vertices at the shortest distance). Each reported cycle
/// is certified by closure from `certify_starts` random starts within
/// closure_tol. Sequences that cancel to the identity letter by letter are
/// excluded.
std::vector<Cycle> find_closed_cycles(std::span<const Point3> vertices, int max_len,
                                      double closure_tol = 1e-8, int certify_starts = 10,
                                      std::uint64_t seed = 1);

/// Smallest rotation / reversal of the cycle in lexicographic order.
Cycle canonical_cycle(const Cycle& c);
/// Same, restricted to rotations by an even offset.
Cycle pair_canonical(const Cycle& c);
/// No two cyclically consecutive entries are equal.
bool cyclically_reduced(const Cycle& c);

}  // namespace porism
