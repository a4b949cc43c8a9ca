#pragma once

#include "nsalpha/types.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace nsalpha {

/// Worker count from NSALPHA_WORKERS, else hardware concurrency.
/// Results of every computation are independent of this value.
inline int worker_count() {
  if (const char* env = std::getenv("NSALPHA_WORKERS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

/// Runs fn(begin, end) over a static partition of [0, n).
/// Chunks are fixed by n alone, so any writes into disjoint per-index slots
/// are reproducible at every worker count.
template <class Fn>
void parallel_for(Index n, Fn&& fn) {
  const int workers = std::min<Index>(worker_count(), std::max<Index>(n, 1));
  if (workers <= 1 || n < 2) {
    fn(Index{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const Index chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const Index b = std::min<Index>(w * chunk, n);
    const Index e = std::min<Index>(b + chunk, n);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& t : pool) t.join();
}

/// Pairwise (tree) summation: fixed reduction order independent of the
/// number of workers that produced the slots, and more accurate than a
/// running sum.
inline Real pairwise_sum(const Real* data, Index n) {
  if (n <= 8) {
    Real s = 0;
    for (Index i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const Index half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

inline Real pairwise_sum(const std::vector<Real>& v) {
  return pairwise_sum(v.data(), static_cast<Index>(v.size()));
}

}  // namespace nsalpha
