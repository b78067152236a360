#pragma once

#include <cstddef>
#include <functional>

namespace skq {

/// Worker count: SKEWQ_THREADS if set to a positive integer, else the
/// hardware concurrency.
int worker_count();

/// Runs body(i) for i in [0, n) on up to `threads` workers (0 means
/// worker_count()). The first exception thrown by any call is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body,
                  int threads = 0);

} // namespace skq
