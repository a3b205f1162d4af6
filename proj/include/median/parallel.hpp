#ifndef MEDIAN_PARALLEL_HPP
#define MEDIAN_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace median {

/// Runs f(i) for i in [0, n). With threads > 1 the range is handed out in
/// blocks to a small pool; f must only touch state owned by i.
template <typename F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
  constexpr std::size_t kBlock = 256;
  if (threads <= 1 || n < 4 * kBlock) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t begin = next.fetch_add(kBlock);
        if (begin >= n) return;
        const std::size_t end = std::min(n, begin + kBlock);
        for (std::size_t i = begin; i < end; ++i) f(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace median

#endif  // MEDIAN_PARALLEL_HPP
