#pragma once

// Thread-count independent reductions.
//
// Work is cut into fixed-size blocks whose layout depends only on the problem
// size. Each block is summed pairwise, then block results are combined
// pairwise in index order, so the floating-point result is identical for any
// number of workers.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace satake {

inline unsigned& thread_override() {
  static unsigned v = 0;
  return v;
}

/// Worker count: explicit override, then SATAKE_THREADS, then the hardware.
inline unsigned default_threads() {
  if (thread_override() > 0) return thread_override();
  if (const char* env = std::getenv("SATAKE_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

inline void set_default_threads(unsigned n) { thread_override() = n; }

constexpr std::size_t kReduceBlock = 1024;

template <class T, class F>
T pairwise_range(F& f, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    T s = f(lo);
    for (std::size_t i = lo + 1; i < hi; ++i) s = s + f(i);
    return s;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_range<T>(f, lo, mid) + pairwise_range<T>(f, mid, hi);
}

template <class T>
T pairwise_vector(const std::vector<T>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return v[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_vector(v, lo, mid) + pairwise_vector(v, mid, hi);
}

/// Runs body(b) for every block index b in [0, nblocks) on up to `threads` workers.
template <class Body>
void parallel_blocks(std::size_t nblocks, unsigned threads, Body body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(nblocks, 1))));
  if (threads == 1) {
    for (std::size_t b = 0; b < nblocks; ++b) body(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t b = next++; b < nblocks; b = next++) body(b);
    });
  for (auto& th : pool) th.join();
}

/// sum_{i<n} f(i), deterministic for any thread count. T needs + and a copy.
template <class T, class F>
T deterministic_sum(std::size_t n, F f, unsigned threads = 0, T zero = T{}) {
  if (n == 0) return zero;
  if (threads == 0) threads = default_threads();
  const std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
  std::vector<T> partial(nblocks, zero);
  parallel_blocks(nblocks, threads, [&](std::size_t b) {
    const std::size_t lo = b * kReduceBlock;
    const std::size_t hi = std::min(n, lo + kReduceBlock);
    partial[b] = pairwise_range<T>(f, lo, hi);
  });
  return pairwise_vector(partial, 0, nblocks);
}

/// Fixed-length vector of accumulators with elementwise +.
template <class T>
struct Accum {
  std::vector<T> v;
  Accum() = default;
  explicit Accum(std::size_t n) : v(n, T{}) {}
  friend Accum operator+(Accum a, const Accum& b) {
    if (a.v.empty()) return b;
    for (std::size_t i = 0; i < b.v.size(); ++i) a.v[i] += b.v[i];
    return a;
  }
};

}  // namespace satake
