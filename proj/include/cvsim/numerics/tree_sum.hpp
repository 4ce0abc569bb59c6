#pragma once

#include <cstddef>
#include <future>
#include <vector>

#include "cvsim/hp/complex.hpp"
#include "cvsim/numerics/parallel.hpp"

namespace cvsim {

namespace detail {

inline constexpr std::size_t kTreeSumGrain = 64;

// The reduction tree is a function of the index range alone (midpoint splits
// down to a fixed grain), so the result is bitwise identical no matter how
// many workers execute it.
template <typename S>
S tree_sum_range(const S* a, std::size_t n, int spawn_depth) {
  if (n == 0) return S{};
  if (n <= kTreeSumGrain) {
    S acc = a[0];
    for (std::size_t i = 1; i < n; ++i) acc += a[i];
    return acc;
  }
  std::size_t mid = (n + 1) / 2;
  if (spawn_depth > 0) {
    auto left = std::async(std::launch::async, [&] {
      return tree_sum_range(a, mid, spawn_depth - 1);
    });
    S right = tree_sum_range(a + mid, n - mid, spawn_depth - 1);
    return left.get() + right;
  }
  return tree_sum_range(a, mid, 0) + tree_sum_range(a + mid, n - mid, 0);
}

inline int spawn_depth_for(std::size_t n) {
  int w = worker_count();
  if (w <= 1 || n <= 4 * detail::kTreeSumGrain) return 0;
  int d = 0;
  while ((1 << (d + 1)) <= w && d < 8) ++d;
  return d;
}

}  // namespace detail

template <typename S>
S tree_sum(const std::vector<S>& terms) {
  return detail::tree_sum_range(terms.data(), terms.size(),
                                detail::spawn_depth_for(terms.size()));
}

template <typename S>
S tree_sum(const S* data, std::size_t n) {
  return detail::tree_sum_range(data, n, detail::spawn_depth_for(n));
}

}  // namespace cvsim
