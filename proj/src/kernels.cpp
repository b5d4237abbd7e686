#include "minorforge/kernels.hpp"

#include <omp.h>

#include "minorforge/errors.hpp"

namespace minorforge::kernels {

namespace {
int g_threads = 0;
}

void set_threads(int n) { g_threads = n < 0 ? 0 : n; }

int threads() { return g_threads > 0 ? g_threads : omp_get_max_threads(); }

std::size_t grid_size(std::span<const std::vector<P1Point>> pointsets) {
  std::size_t total = 1;
  for (const auto& ps : pointsets) {
    if (ps.empty()) return 0;
    if (total > std::numeric_limits<std::size_t>::max() / ps.size()) throw InputError("grid too large");
    total *= ps.size();
  }
  return total;
}

std::vector<std::size_t> grid_coordinates(std::span<const std::vector<P1Point>> pointsets, std::size_t index) {
  std::vector<std::size_t> out(pointsets.size());
  for (std::size_t k = pointsets.size(); k-- > 0;) {
    out[k] = index % pointsets[k].size();
    index /= pointsets[k].size();
  }
  return out;
}

RingValue evaluate_at_grid_point(const MultiPoly& g, std::span<const std::vector<P1Point>> pointsets,
                                 std::size_t index) {
  const std::size_t n = pointsets.size();
  auto coords = grid_coordinates(pointsets, index);
  std::vector<RingValue> point(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    point[i] = pointsets[i][coords[i]].x;
    point[n + i] = pointsets[i][coords[i]].y;
  }
  return evaluate(g, point);
}

bool grid_vanishes(const MultiPoly& g, std::span<const std::vector<P1Point>> pointsets, Execution ex) {
  if (g.is_zero()) return true;
  const std::size_t total = grid_size(pointsets);
  auto nonzero = [&](std::size_t i) { return !evaluate_at_grid_point(g, pointsets, i).is_zero(); };
  return first_match(total, nonzero, ex) == total;
}

}  // namespace minorforge::kernels
