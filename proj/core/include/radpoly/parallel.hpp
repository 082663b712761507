#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace radpoly {

/// Runs fn(i) for i in [0, count). Work is split into contiguous chunks over a
/// small pool of std::thread workers; results must only depend on the index, so
/// the outcome is identical to the serial loop. Falls back to the serial loop
/// for small counts and inside nested calls.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  static thread_local bool inside_pool = false;

  unsigned hw = std::thread::hardware_concurrency();
  std::size_t min_chunk = 64;
  if (inside_pool || hw <= 1 || count < 2 * min_chunk) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::size_t n_threads = std::min<std::size_t>(hw, count / min_chunk);
  std::size_t chunk = (count + n_threads - 1) / n_threads;
  std::vector<std::thread> workers;
  workers.reserve(n_threads);
  for (std::size_t t = 0; t < n_threads; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([lo, hi, &fn] {
      inside_pool = true;
      for (std::size_t i = lo; i < hi; ++i) fn(i);
      inside_pool = false;
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace radpoly
