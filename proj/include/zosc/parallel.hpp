#pragma once

// Deterministic parallel loops. Work is split into chunks whose boundaries
// depend only on the problem size, never on the worker count, and partial
// results are merged in chunk order.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "zosc/common.hpp"

namespace zosc {

/// Calls body(i) for every i in [0, n). Each index is processed exactly once;
/// callers must make body(i) independent of other indices.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  const unsigned workers = std::min<std::size_t>(thread_count(), n == 0 ? 1 : n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

/// Chunked reduction over [0, n): chunk k covers [k*chunk, (k+1)*chunk).
/// partial(begin, end) returns the chunk's accumulator; accumulators are
/// merged with merge(acc, part) strictly in chunk order.
template <class Acc, class Partial, class Merge>
Acc chunked_reduce(std::size_t n, std::size_t chunk, Partial&& partial, Merge&& merge) {
  const std::size_t chunks = n == 0 ? 0 : (n + chunk - 1) / chunk;
  std::vector<Acc> parts(chunks);
  parallel_for(chunks, [&](std::size_t k) {
    const std::size_t begin = k * chunk;
    parts[k] = partial(begin, std::min(n, begin + chunk));
  });
  Acc acc{};
  for (auto& p : parts) merge(acc, p);
  return acc;
}

}  // namespace zosc
