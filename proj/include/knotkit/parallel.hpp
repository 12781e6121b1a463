#pragma once

#include <functional>

namespace knotkit {

/// Worker cap: KNOTKIT_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int thread_count();

/// Runs task(i) for i in [0, count) on up to thread_count() threads. Tasks
/// must write only to their own slot of any shared output. The first
/// exception thrown by a task is rethrown after all workers finish.
void parallel_for(int count, const std::function<void(int)> &task);

} // namespace knotkit
