#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace preord {

// Runs f(begin, end) over contiguous chunks of [0, n) on worker threads.
// Work is pure per index range; callers merge results by index order, so
// scheduling cannot affect observable output.
template <class F>
void parallel_chunks(int n, F f) {
  if (n <= 0) return;
  int workers = int(std::thread::hardware_concurrency());
  workers = std::max(1, std::min({workers, n, 16}));
  if (workers == 1) {
    f(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  int chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    int b = w * chunk, e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&f, b, e] { f(b, e); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace preord
