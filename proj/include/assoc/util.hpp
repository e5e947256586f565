#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace assoc {

// Worker cap for parallel sections: ASSOC_THREADS if set, else hardware count.
inline int worker_count() {
  if (const char* env = std::getenv("ASSOC_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, n). Each index writes only its own slot in the caller's
// output, so results are identical for any worker count.
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
  int workers = worker_count();
  if (workers <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  size_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    size_t lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace assoc
