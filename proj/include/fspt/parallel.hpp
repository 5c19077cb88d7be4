#pragma once

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace fspt {

/// Runs fn(0..count-1) on up to `workers` threads. Results must be written to
/// per-index slots; aggregation order is the caller's, so parallel runs stay
/// deterministic. Exceptions are rethrown on the calling thread.
inline void parallel_for(std::size_t count, int workers,
                         const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::atomic<std::size_t> next{0};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= count) return;
          fn(i);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace fspt
