#pragma once

#include <cstddef>
#include <functional>

namespace csobstruct {

/// Worker count: CS_OBSTRUCT_THREADS if set to a positive integer,
/// otherwise std::thread::hardware_concurrency() (at least 1).
unsigned worker_count();

/// Calls body(i) for i in [0, n) on up to worker_count() threads. Callers
/// write results into index-addressed slots so the output order does not
/// depend on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace csobstruct
