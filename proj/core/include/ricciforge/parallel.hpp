#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ricciforge {

/// Worker cap: RICCIFORGE_THREADS if set and positive, else hardware concurrency.
std::size_t worker_count();

/// Runs f(i) for i in [0, n) over contiguous chunks. Each index is visited once,
/// so writes to per-index slots are race-free and results are independent of the
/// thread count. The exception of the lowest failing chunk is rethrown.
template <class F>
void parallel_for(std::size_t n, F&& f, std::size_t min_chunk = 64) {
  const std::size_t workers =
      std::min(worker_count(), std::max<std::size_t>(1, n / std::max<std::size_t>(1, min_chunk)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        try {
          for (std::size_t i = lo; i < hi; ++i) f(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

template <class F>
std::vector<double> parallel_map(std::size_t n, F&& f, std::size_t min_chunk = 64) {
  std::vector<double> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = f(i); }, min_chunk);
  return out;
}

}  // namespace ricciforge
