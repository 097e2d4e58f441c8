#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hsl {

namespace detail {
inline std::atomic<unsigned>& jobs_setting() {
  static std::atomic<unsigned> jobs{0};
  return jobs;
}
}  // namespace detail

// 0 means "use hardware concurrency".
inline void set_default_jobs(unsigned jobs) { detail::jobs_setting() = jobs; }

inline unsigned default_jobs() {
  const unsigned j = detail::jobs_setting();
  if (j != 0) return j;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs fn(i) for i in [0, n). If several calls throw, the exception from the smallest
/// index is rethrown, so failures do not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn, unsigned jobs = default_jobs()) {
  if (n == 0) return;
  const std::size_t workers = std::min<std::size_t>(std::max(1U, jobs), n);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::size_t error_index = n;
  std::exception_ptr error;
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

template <class R, class Fn>
std::vector<R> parallel_map(std::size_t n, Fn&& fn, unsigned jobs = default_jobs()) {
  std::vector<R> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = fn(i); }, jobs);
  return out;
}

}  // namespace hsl
