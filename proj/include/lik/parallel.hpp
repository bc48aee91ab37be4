#pragma once

#include <cstdint>
#include <functional>

namespace lik {

/// Worker count from LIK_THREADS (0 or unset = hardware concurrency).
int thread_budget();

/// Runs body(i) for i in [0, n). body must write only to slots owned by i;
/// the chunked schedule makes results independent of the worker count.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body);

}  // namespace lik
