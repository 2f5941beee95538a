#pragma once

#include <thread>
#include <vector>

namespace cubicdist {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : (int)hc;
}

// Static block partition of [0, n); each worker writes only its own slots, so
// results do not depend on scheduling.
template <typename F>
void parallel_for(size_t n, int threads, F&& fn) {
  threads = resolve_threads(threads);
  if (threads <= 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  size_t nt = std::min<size_t>((size_t)threads, n);
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (size_t t = 0; t < nt; ++t) {
    pool.emplace_back([&, t]() {
      size_t lo = n * t / nt, hi = n * (t + 1) / nt;
      for (size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace cubicdist
