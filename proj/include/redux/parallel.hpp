#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>

#include <omp.h>

namespace redux {

/// Execution mode for the data-parallel kernels. `serial` is the reference
/// implementation; `parallel` must return identical results.
enum class Exec { serial, parallel };

inline void set_thread_count(int n) {
  if (n > 0) omp_set_num_threads(n);
}

inline int thread_count() { return omp_get_max_threads(); }

/// Smallest index i in [0, count) with pred(i) true, or nullopt.
///
/// The parallel variant scans chunks concurrently and keeps the minimum
/// matching index, so the answer does not depend on the number of threads.
/// `pred` must be safe to call concurrently.
template <class Pred>
std::optional<std::size_t> first_match(std::size_t count, Pred&& pred, Exec exec = Exec::parallel) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{kNone};
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto n = static_cast<long long>(count);

#pragma omp parallel for schedule(dynamic, 16)
  for (long long k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (i >= best.load(std::memory_order_relaxed)) continue;
    try {
      if (pred(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      best.store(0);
    }
  }
  if (error) std::rethrow_exception(error);
  if (best.load() == kNone) return std::nullopt;
  return best.load();
}

/// Applies `body(i)` for every i in [0, count).
template <class Body>
void for_each_index(std::size_t count, Body&& body, Exec exec = Exec::parallel) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (long long k = 0; k < n; ++k) {
    try {
      body(static_cast<std::size_t>(k));
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace redux
