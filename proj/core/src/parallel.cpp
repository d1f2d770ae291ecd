#include "zetalab/parallel.hpp"

namespace zetalab {

namespace {
std::atomic<int> g_threads{0};
}

int threads() {
  const int t = g_threads.load(std::memory_order_relaxed);
  if (t > 0) return t;
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw ? hw : 1u, 1u, 8u));
}

void set_threads(int n) { g_threads.store(n > 0 ? n : 0, std::memory_order_relaxed); }

}  // namespace zetalab
