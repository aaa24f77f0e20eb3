#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace goldman {

inline std::atomic<int>& thread_override() {
  static std::atomic<int> v{0};
  return v;
}

inline void set_worker_threads(int n) { thread_override().store(n); }

inline int worker_threads() {
  int n = thread_override().load();
  if (n > 0) return n;
  if (const char* env = std::getenv("GOLDMAN_THREADS")) {
    int e = std::atoi(env);
    if (e > 0) return e;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs fn(i) for i in [0, n) on the worker pool. Results must be written to
/// index-addressed slots so the outcome is independent of the thread count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  int workers = worker_threads();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  int count = std::min<std::size_t>(workers, n);
  pool.reserve(count);
  for (int t = 0; t < count - 1; ++t) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
}

}  // namespace goldman
