#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace sailkit {

// Worker count: SAILKIT_THREADS if set and positive, else the hardware
// concurrency (at least 1).
unsigned thread_count();

// Runs fn(i) for i in [0, n) on up to thread_count() threads. Work is handed
// out in index order; fn must be safe to call concurrently.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Results come back in index order regardless of scheduling.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& fn) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace sailkit
