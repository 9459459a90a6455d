#pragma once

#include <cstddef>
#include <functional>

namespace pbt {

/// Worker count: PBT_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads. Work is
/// handed out by index, so callers that write results into slot i get output
/// that does not depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace pbt
