#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace stationary {

/// Worker count: hardware concurrency, capped by STATIONARY_THREADS when set.
std::size_t worker_count();

/// Runs body(i) for i in [0, n). Each index is visited exactly once; callers
/// write into preallocated slots and reduce afterwards so results do not
/// depend on scheduling. If any body throws, the exception raised at the
/// lowest index is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace stationary
