#pragma once

#include <cstddef>
#include <functional>

namespace pilab {

/// Worker count: PILAB_THREADS if set (>= 1), else the hardware concurrency.
std::size_t thread_count();

/// Overrides thread_count() for this process; 0 restores the default.
void set_thread_count(std::size_t n);

/// Calls body(i) for i in [0, n). Indices are split into contiguous chunks,
/// one per worker, so a body that writes only to slot i gives the same result
/// for every thread count. The first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace pilab
