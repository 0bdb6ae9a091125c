#pragma once

#include <cstddef>
#include <functional>

namespace mgs {

// Worker count: --threads / set_thread_count override, else MGSPECTRAL_THREADS,
// else the hardware concurrency.
int thread_count();
void set_thread_count(int n); // n <= 0 restores the default resolution

// Static block-partitioned parallel loop over [0, n). Falls back to a serial
// loop for small n or a single worker. Callers own any reduction ordering.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace mgs
