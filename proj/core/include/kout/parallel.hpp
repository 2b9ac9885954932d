#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace kout {

/**
 * Runs fn(i) for every i in [0, count), fanning out over up to
 * hardware_concurrency() workers.  Each index must write only its own
 * output slot; under that discipline results are identical to a
 * sequential run no matter the worker count, and callers reduce in index
 * order afterwards.  The first exception thrown by fn is rethrown here
 * after all workers stop.
 */
inline void parallel_for(std::uint64_t count,
                         const std::function<void(std::uint64_t)>& fn) {
  std::uint64_t workers = std::thread::hardware_concurrency();
  if (workers < 2 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  if (workers > count) workers = count;

  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (!failed.load(std::memory_order_relaxed)) {
        std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          failed.store(true, std::memory_order_relaxed);
          return;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace kout
