#include "zosc/common.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace zosc {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_thread_count(unsigned n) {
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  g_threads = n;
}

unsigned thread_count() { return g_threads.load(); }

}  // namespace zosc
