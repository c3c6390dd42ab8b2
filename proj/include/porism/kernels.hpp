#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "porism/geom.hpp"
#include "porism/sphere.hpp"

namespace porism {

/// Batch kernels for the randomized property checks. Each function is
/// OpenMP-parallel over its outer loop; the serial:: versions are the
/// reference implementations and return identical results.

/// Closure defect of the chain from every start.
std::vector<double> closure_defects(const Circle& c, std::span<const Point2> pivots,
                                    std::span<const CirclePoint> starts,
                                    const Tolerances& tol = {});
std::vector<double> sphere_closure_defects(std::span<const Point3> pivots,
                                           std::span<const SpherePoint> starts,
                                           const Tolerances& tol = {});

/// Vertex sequences of even length <= max_len made of consecutive edge
/// pairs (w[0], w[1]), (w[2], w[3]), ..., for which the chains from all
/// `probes` return to their start within probe_tol. Only cyclically
/// reduced sequences in pair-canonical form are reported, one per class
/// of rotations and reversals, sorted.
std::vector<Cycle> closed_pair_walks(std::span<const Point3> vertices,
                                     std::span<const std::array<int, 2>> edges, int max_len,
                                     std::span<const SpherePoint> probes, double probe_tol);

namespace serial {

std::vector<double> closure_defects(const Circle& c, std::span<const Point2> pivots,
                                    std::span<const CirclePoint> starts,
                                    const Tolerances& tol = {});
std::vector<double> sphere_closure_defects(std::span<const Point3> pivots,
                                           std::span<const SpherePoint> starts,
                                           const Tolerances& tol = {});
std::vector<Cycle> closed_pair_walks(std::span<const Point3> vertices,
                                     std::span<const std::array<int, 2>> edges, int max_len,
                                     std::span<const SpherePoint> probes, double probe_tol);

}  // namespace serial

}  // namespace porism
