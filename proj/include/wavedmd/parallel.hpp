#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include <Eigen/Core>

namespace wavedmd {

/// Worker count from WAVEDMD_WORKERS, falling back to the hardware thread count.
int default_workers();

/// Runs fn(i) for i in [0, n) on up to `workers` threads, in contiguous
/// chunks. The first exception thrown by any worker is rethrown.
template <typename F>
void parallel_for(Eigen::Index n, int workers, F&& fn) {
  const auto count = static_cast<Eigen::Index>(std::max(1, workers));
  if (count == 1 || n < 2) {
    for (Eigen::Index i = 0; i < n; ++i) fn(i);
    return;
  }
  const Eigen::Index chunks = std::min(count, n);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(chunks));
    for (Eigen::Index c = 0; c < chunks; ++c) {
      const Eigen::Index begin = n * c / chunks;
      const Eigen::Index end = n * (c + 1) / chunks;
      pool.emplace_back([&, begin, end] {
        try {
          for (Eigen::Index i = begin; i < end; ++i) fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace wavedmd
