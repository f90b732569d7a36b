// Fixed-size worker pool for independent scan cells. Results land in the
// slot of their input index, so output never depends on scheduling.

#ifndef PENTATAIL_PARALLEL_HPP
#define PENTATAIL_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace pentatail {

/// Environment variable read by default_workers().
inline constexpr const char* kWorkersEnv = "PENTATAIL_WORKERS";

/// PENTATAIL_WORKERS if set to a positive integer, else hardware concurrency.
unsigned default_workers();

template <typename R, typename F>
std::vector<R> parallel_map(std::size_t count, unsigned workers, F&& fn) {
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t pool = std::min<std::size_t>(std::max(1u, workers), count);
  if (pool <= 1) {
    drain();
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(pool);
    for (std::size_t t = 0; t < pool; ++t) threads.emplace_back(drain);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace pentatail

#endif  // PENTATAIL_PARALLEL_HPP
