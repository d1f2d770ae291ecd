#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace zetalab {

// Worker-thread count used by the scan and quadrature loops.
int threads();
// n >= 1 sets an explicit count; n <= 0 restores the hardware default.
void set_threads(int n);

// Runs f(begin, end) over [0, n) in fixed-size chunks, possibly in parallel,
// and returns the per-chunk results in chunk order.  The chunk layout does
// not depend on the thread count, so reductions folded in chunk order are
// bit-stable for any --threads setting.
template <class T, class Fn>
std::vector<T> map_chunks(std::int64_t n, std::int64_t chunk, Fn&& f) {
  if (n <= 0) return {};
  chunk = std::max<std::int64_t>(1, chunk);
  const std::int64_t nchunks = (n + chunk - 1) / chunk;
  std::vector<T> out(static_cast<std::size_t>(nchunks));
  const int nt = static_cast<int>(std::min<std::int64_t>(threads(), nchunks));
  if (nt <= 1) {
    for (std::int64_t i = 0; i < nchunks; ++i)
      out[static_cast<std::size_t>(i)] = f(i * chunk, std::min(n, (i + 1) * chunk));
    return out;
  }
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= nchunks) return;
      out[static_cast<std::size_t>(i)] = f(i * chunk, std::min(n, (i + 1) * chunk));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nt - 1));
  for (int i = 0; i < nt - 1; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace zetalab
