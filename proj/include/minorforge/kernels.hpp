#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <span>
#include <vector>

#include "minorforge/multipoly.hpp"

namespace minorforge::kernels {

enum class Execution { serial, parallel };

/// Worker count used by the parallel kernels (OpenMP); 0 restores the runtime default.
void set_threads(int n);
int threads();

/// Smallest i in [0, count) with pred(i), or count when there is none. The
/// parallel form returns the same index; exceptions are rethrown for the smallest
/// throwing index that precedes any match.
template <class Pred>
std::size_t first_match(std::size_t count, Pred&& pred, Execution ex) {
  if (ex == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return count;
  }
  std::atomic<std::size_t> best{count};
  std::mutex err_mu;
  std::size_t err_index = std::numeric_limits<std::size_t>::max();
  std::exception_ptr err;
  const auto total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads())
  for (long long k = 0; k < total; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (i >= best.load(std::memory_order_relaxed)) continue;
    try {
      if (pred(i)) {
        std::size_t cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    } catch (...) {
      std::lock_guard lock(err_mu);
      if (i < err_index) {
        err_index = i;
        err = std::current_exception();
      }
    }
  }
  if (err && err_index < best.load()) std::rethrow_exception(err);
  return best.load();
}

/// Number of points in the product grid.
std::size_t grid_size(std::span<const std::vector<P1Point>> pointsets);

/// Odometer decoding of a grid index (last pair varies fastest).
std::vector<std::size_t> grid_coordinates(std::span<const std::vector<P1Point>> pointsets, std::size_t index);

/// g evaluated at grid point `index`; g is a paired form over 2n variables.
RingValue evaluate_at_grid_point(const MultiPoly& g, std::span<const std::vector<P1Point>> pointsets,
                                 std::size_t index);

/// True when g vanishes at every point of the grid.
bool grid_vanishes(const MultiPoly& g, std::span<const std::vector<P1Point>> pointsets, Execution ex);

}  // namespace minorforge::kernels
