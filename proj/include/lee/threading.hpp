#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace lee {

// Splits [0, count) into at most `threads` contiguous ranges and runs fn on
// each, the last range on the calling thread.  The values a worker writes
// depend only on the indices it owns, never on the partition, so any worker
// count produces bit-identical results.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    if (count > 0) fn(std::size_t{0}, count);
    return;
  }
  const std::size_t t = std::min(static_cast<std::size_t>(threads), count);
  std::vector<std::thread> pool;
  pool.reserve(t - 1);
  const std::size_t chunk = count / t;
  const std::size_t rem = count % t;
  std::size_t begin = 0;
  for (std::size_t w = 0; w < t; ++w) {
    const std::size_t end = begin + chunk + (w < rem ? 1 : 0);
    if (w + 1 == t) {
      fn(begin, end);
    } else {
      pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    begin = end;
  }
  for (auto& th : pool) th.join();
}

}  // namespace lee
