// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <vector>

#include "porism/kernels.hpp"
#include "porism/random.hpp"
#include "porism/sphere.hpp"

namespace {

using namespace porism;

const Circle kUnit({0.0, 0.0}, 1.0);
const std::vector<Point2> kPivots{{-0.5, 0}, {0.2, 0}, {0.5, 0}, {-0.2, 0}};

std::vector<CirclePoint> circle_starts(std::size_t n) {
  Rng rng(1);
  std::vector<CirclePoint> out(n);
  for (auto& x : out) x = rng.circle_point();
  return out;
}

std::vector<SpherePoint> sphere_starts(std::size_t n) {
  Rng rng(2);
  std::vector<SpherePoint> out;
  while (out.size() < n) {
    const Point3 v{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    if (norm(v) > 0.1) out.emplace_back(v);
  }
  return out;
}

template <auto Kernel>
void circle_defects(benchmark::State& state) {
  const auto xs = circle_starts(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(kUnit, kPivots, xs, Tolerances{}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void sphere_defects(benchmark::State& state) {
  const auto v = right_angled_dodecahedron();
  const std::vector<Point3> piv{v[0], v[8], v[4], v[15], v[11], v[17], v[3], v[16]};
  const auto xs = sphere_starts(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(piv, xs, Tolerances{}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void pair_walks(benchmark::State& state) {
  const auto v = right_angled_dodecahedron();
  const auto edges = dodecahedron_edges();
  const auto probes = sphere_starts(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Kernel(v, edges, static_cast<int>(state.range(0)), probes, 1e-8));
  }
}

}  // namespace

BENCHMARK(circle_defects<porism::closure_defects>)
    ->Name("closure_defects/openmp")
    ->Arg(1 << 12)
    ->Arg(1 << 18);
BENCHMARK(circle_defects<porism::serial::closure_defects>)
    ->Name("closure_defects/serial")
    ->Arg(1 << 12)
    ->Arg(1 << 18);
BENCHMARK(sphere_defects<porism::sphere_closure_defects>)
    ->Name("sphere_closure_defects/openmp")
    ->Arg(1 << 12)
    ->Arg(1 << 16);
BENCHMARK(sphere_defects<porism::serial::sphere_closure_defects>)
    ->Name("sphere_closure_defects/serial")
    ->Arg(1 << 12)
    ->Arg(1 << 16);
BENCHMARK(pair_walks<porism::closed_pair_walks>)->Name("closed_pair_walks/openmp")->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(pair_walks<porism::serial::closed_pair_walks>)
    ->Name("closed_pair_walks/serial")
    ->Arg(6)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
