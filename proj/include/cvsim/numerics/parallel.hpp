#pragma once

#include <cstddef>
#include <functional>

namespace cvsim {

// Process-wide worker budget for internal parallelism. The partitioning of
// work is a function of the problem size only, never of the worker count, so
// results are identical for any setting.
int worker_count();
void set_worker_count(int n);

// Runs f(i) for i in [0, n). f writes to caller-owned, index-disjoint slots.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f,
                  std::size_t grain = 1);

}  // namespace cvsim
