#ifndef EQMON_PARALLEL_HPP
#define EQMON_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace eqmon {

/// Worker count: WORKBENCH_THREADS when set (minimum 1), else the
/// hardware concurrency.
inline size_t worker_count() {
  if (const char* env = std::getenv("WORKBENCH_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<size_t>(v);
    return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, n) across worker_count() threads.  fn must be
/// safe to call concurrently for distinct i.
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
  size_t workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace eqmon

#endif  // EQMON_PARALLEL_HPP
