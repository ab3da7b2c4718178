#pragma once

// Deterministic parallel corpus sweeps: indices are handed out in chunks,
// results are merged by minimum corpus index, so serial and parallel runs
// report identical outcomes.

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace vacred {

inline constexpr std::uint64_t kSweepChunk = 256;

/// Runs `work(worker_id, lo, hi)` over chunked subranges of [0, size) on
/// `jobs` workers. With jobs <= 1 the whole range runs on the calling thread.
template <typename Work>
void parallel_chunks(std::uint64_t size, int jobs, Work work) {
  if (jobs <= 1 || size <= kSweepChunk) {
    work(0, std::uint64_t{0}, size);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (;;) {
        const std::uint64_t lo = next.fetch_add(kSweepChunk);
        if (lo >= size) return;
        work(w, lo, std::min(lo + kSweepChunk, size));
      }
    });
  }
  for (std::thread& worker : workers) worker.join();
}

/// Shared "first hit" position: workers skip indices at or after the current
/// minimum, and the merged result is the overall minimum hit index.
class FirstHit {
 public:
  std::uint64_t current() const { return best_.load(std::memory_order_relaxed); }

  bool before_current(std::uint64_t index) const { return index < current(); }

  /// Records a hit; returns true when `index` improved the minimum.
  bool record(std::uint64_t index) {
    std::uint64_t seen = best_.load(std::memory_order_relaxed);
    while (index < seen &&
           !best_.compare_exchange_weak(seen, index, std::memory_order_relaxed))
      ;
    return index <= best_.load(std::memory_order_relaxed);
  }

  bool any() const { return current() != kNone; }

  static constexpr std::uint64_t kNone = ~std::uint64_t{0};

 private:
  std::atomic<std::uint64_t> best_{kNone};
};

}  // namespace vacred
