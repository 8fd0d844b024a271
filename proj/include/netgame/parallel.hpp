#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace netgame {

inline unsigned resolve_thread_count(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

// Splits [0, total) into fixed-size blocks, runs body(acc, begin, end) once
// per block, and merges the per-block accumulators in block order. The merge
// order is fixed by the block index, so results are bit-identical regardless
// of the number of worker threads or their scheduling.
template <class Acc, class Body, class Merge>
Acc blocked_reduce(std::uint64_t total, std::uint64_t block_size, int threads,
                   const Acc& zero, Body body, Merge merge) {
  Acc out = zero;
  if (total == 0) return out;
  if (block_size == 0) block_size = 1;
  const std::uint64_t n_blocks = (total + block_size - 1) / block_size;
  const unsigned n_threads = static_cast<unsigned>(
      std::min<std::uint64_t>(resolve_thread_count(threads), n_blocks));

  std::vector<Acc> partial(static_cast<std::size_t>(n_blocks), zero);
  auto run_block = [&](std::uint64_t b) {
    const std::uint64_t begin = b * block_size;
    const std::uint64_t end = std::min(total, begin + block_size);
    body(partial[static_cast<std::size_t>(b)], begin, end);
  };

  if (n_threads <= 1) {
    for (std::uint64_t b = 0; b < n_blocks; ++b) run_block(b);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) {
      pool.emplace_back([&] {
        for (std::uint64_t b = next.fetch_add(1); b < n_blocks; b = next.fetch_add(1)) {
          run_block(b);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  for (std::uint64_t b = 0; b < n_blocks; ++b) {
    merge(out, partial[static_cast<std::size_t>(b)]);
  }
  return out;
}

}  // namespace netgame
