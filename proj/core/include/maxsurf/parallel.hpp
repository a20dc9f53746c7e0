#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace maxsurf {

/// Run fn(begin, end) over a partition of [0, n) on up to `jobs` threads
/// (0 = hardware concurrency). Workers own disjoint index ranges, so results
/// written per-index are identical for any job count.
template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
  if (n == 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t workers = jobs > 0 ? static_cast<std::size_t>(jobs) : (hw ? hw : 1);
  if (workers > n) workers = n;
  if (workers <= 1) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = begin + chunk < n ? begin + chunk : n;
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace maxsurf
