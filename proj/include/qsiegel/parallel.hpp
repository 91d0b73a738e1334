#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace qsiegel {

/// Runs body(i) for i in [0, count) on `threads` workers with a static
/// strided assignment. Callers store per-index results and reduce them in
/// index order, which keeps results independent of the thread count.
template <typename Body>
void parallel_for(std::int64_t count, int threads, Body body) {
  threads = std::max(1, static_cast<int>(std::min<std::int64_t>(threads, count)));
  if (threads == 1) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::int64_t i = t; i < count; i += threads) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace qsiegel
