#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace lwl {

// Thread cap: LWL_THREADS if set (0 = auto), else hardware concurrency.
inline int thread_budget() {
  if (const char* env = std::getenv("LWL_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) {
      if (v > 0) return static_cast<int>(v);
      const unsigned hc = std::thread::hardware_concurrency();
      return hc ? static_cast<int>(hc) : 1;
    }
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Runs work(c) for c = 0..chunks-1 on up to thread_budget() threads.  Chunk
// boundaries are fixed by the caller, so per-chunk results (and any ordered
// reduction over them) do not depend on how many threads actually ran.
inline void run_chunks(int chunks, const std::function<void(int)>& work) {
  const int threads = std::min(chunks, thread_budget());
  if (threads <= 1) {
    for (int c = 0; c < chunks; ++c) work(c);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int c; (c = next.fetch_add(1)) < chunks;) work(c);
    });
  for (auto& th : pool) th.join();
}

}  // namespace lwl
