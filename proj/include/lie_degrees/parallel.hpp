#ifndef LIE_DEGREES_PARALLEL_HPP
#define LIE_DEGREES_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace lie_degrees {

/// Worker count: LIE_DEGREES_THREADS if set and positive, else `fallback`
/// (0 means hardware concurrency).
inline unsigned thread_count(unsigned fallback = 0) {
  if (const char* env = std::getenv("LIE_DEGREES_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  if (fallback) return fallback;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Computes out[i] = fn(i) for i < count. Results land by index, so the
/// output never depends on scheduling. The first exception is rethrown.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, unsigned threads, Fn fn) {
  std::vector<T> out(count);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace lie_degrees

#endif  // LIE_DEGREES_PARALLEL_HPP
