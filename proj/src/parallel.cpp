#include "cvsim/numerics/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace cvsim {

namespace {
std::atomic<int> g_workers{0};  // 0 = use hardware concurrency
}

int worker_count() {
  int w = g_workers.load();
  if (w > 0) return w;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void set_worker_count(int n) { g_workers.store(n < 1 ? 1 : n); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f,
                  std::size_t grain) {
  int w = worker_count();
  if (w <= 1 || n <= grain) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::size_t threads = std::min<std::size_t>(w, (n + grain - 1) / grain);
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (;;) {
      std::size_t lo = next.fetch_add(grain);
      if (lo >= n) break;
      std::size_t hi = std::min(n, lo + grain);
      for (std::size_t i = lo; i < hi; ++i) f(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
}

}  // namespace cvsim
