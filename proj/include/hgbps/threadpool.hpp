#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hgbps {

inline int worker_count() {
  if (const char* env = std::getenv("HGBPS_WORKERS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 4;
}

// Deterministic parallel map: results collected in input order.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F&& fn) {
  using R = decltype(fn(items.front()));
  std::vector<R> out(items.size());
  int workers = std::min<int>(worker_count(), (int)items.size());
  if (workers <= 1) {
    for (size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= items.size()) return;
        out[i] = fn(items[i]);
      }
    });
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace hgbps
