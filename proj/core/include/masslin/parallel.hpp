#pragma once

#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace masslin {

/// Worker count: hardware concurrency capped by the MASSLIN_THREADS
/// environment variable when set (a value of 1 disables threading).
inline std::size_t thread_budget() {
  std::size_t n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("MASSLIN_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1 && static_cast<std::size_t>(v) < n)
      n = static_cast<std::size_t>(v);
  }
  return n;
}

/// Applies fn to 0..count-1 on a fixed thread pool, collecting results
/// in index order. The first exception thrown by any worker is
/// rethrown on the calling thread after all workers join.
template <typename R>
std::vector<R> parallel_map(std::size_t count,
                            const std::function<R(std::size_t)>& fn) {
  std::vector<R> out(count);
  if (count == 0) return out;
  const std::size_t workers = std::min(thread_budget(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace masslin
