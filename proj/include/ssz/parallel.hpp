#pragma once

#include <cstddef>
#include <functional>

namespace ssz {

/// Worker count for grid fan-out: hardware concurrency, capped by the
/// SHEFFER_SZASZ_THREADS environment variable when it is set to a
/// positive value (0 or unset means no cap).
int thread_budget();

/// Runs fn(i) for i in [0, count) across the thread budget. Exceptions are
/// captured and the first one (by index) is rethrown after all workers
/// join, so results stay deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace ssz
