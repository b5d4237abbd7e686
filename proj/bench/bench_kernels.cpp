#include <benchmark/benchmark.h>

#include <random>

#include "minorforge/hyperdet.hpp"
#include "minorforge/kernels.hpp"
#include "minorforge/minor_map.hpp"
#include "minorforge/squares.hpp"

using namespace minorforge;

namespace {

MinorVector image_vector(const RingDescriptor& ring, std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-3, 3);
  SymMatrix a(ring, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a.set(i, j, ring.from_int(d(rng)));
  return principal_minors(a);
}

kernels::Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? kernels::Execution::serial : kernels::Execution::parallel;
}

// Full scan: vectors in the image make every orbit equation vanish.
void BM_OrbitFirstNonzero(benchmark::State& state) {
  const auto ring = RingDescriptor::prime_field(7);
  const auto a = image_vector(ring, static_cast<std::size_t>(state.range(1)), 1);
  const OrbitEvaluator eval(a, evaluation_set(ring));
  const auto ex = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(eval.first_nonzero(ex));
  state.counters["equations"] = static_cast<double>(eval.count());
}
BENCHMARK(BM_OrbitFirstNonzero)->ArgsProduct({{0, 1}, {6, 7}})->Unit(benchmark::kMillisecond);

// Grid evaluation of a form that vanishes at every grid point, so the whole grid is scanned.
void BM_GridVanishes(benchmark::State& state) {
  const auto ring = RingDescriptor::prime_field(101);
  const std::size_t n = static_cast<std::size_t>(state.range(1));
  const auto f = minor_polynomial(image_vector(ring, n, 2));
  const std::vector<unsigned> twos(n, 2);
  MultiPoly g = multi_homogenize(rayleigh_delta(f, 0, 1), twos);
  const auto x0 = MultiPoly::variable(ring, 2 * n, 0), y0 = MultiPoly::variable(ring, 2 * n, n);
  for (int r = 0; r < 5; ++r) g *= x0 - y0.scaled(ring.from_int(r));
  std::vector<std::vector<P1Point>> grid;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<P1Point> points;
    for (int r = 0; r < 5; ++r) points.push_back(P1Point::affine(ring.from_int(r)));
    grid.push_back(points);
  }
  const auto ex = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::grid_vanishes(g, grid, ex));
  state.counters["points"] = static_cast<double>(kernels::grid_size(grid));
}
BENCHMARK(BM_GridVanishes)->ArgsProduct({{0, 1}, {4, 5, 6}})->Unit(benchmark::kMillisecond);

// Whole hyperdeterminant decision on an image vector.
void BM_DecideHypdet(benchmark::State& state) {
  const auto ring = RingDescriptor::integers();
  const auto a = image_vector(ring, static_cast<std::size_t>(state.range(1)), 3);
  const auto ex = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(decide_membership_hypdet(a, HypdetMode::exact, ex).pass);
}
BENCHMARK(BM_DecideHypdet)->ArgsProduct({{0, 1}, {5, 6}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
