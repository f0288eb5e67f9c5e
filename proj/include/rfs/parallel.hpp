#pragma once

#include <cstddef>
#include <functional>

namespace rfs {

// Worker count: min(hardware_concurrency, RF_SURROGATE_THREADS when set).
// The cap is an accounting knob only; every parallel region writes disjoint
// outputs, so results never depend on the thread count.
std::size_t worker_count();

// Runs fn(i) for i in [0, n) on static contiguous chunks.  fn must only
// write state owned by index i.  Exceptions propagate from the calling
// thread's chunk; worker-chunk exceptions are rethrown after the join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace rfs
