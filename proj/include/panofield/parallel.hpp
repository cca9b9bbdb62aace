#pragma once

#include <cstdint>
#include <functional>

namespace panofield {

// Worker count used by parallel_for. 0 = hardware concurrency.
// Resolution order: explicit set_thread_count(), PANOFIELD_THREADS, hardware.
int thread_count();
void set_thread_count(int n);

// Runs fn(chunk) for chunk in [0, num_chunks). Work is partitioned into the
// given fixed chunks regardless of worker count, so any chunk-local numeric
// result is identical for every thread count. Callers that reduce across
// chunks must do so in chunk order after this returns.
void parallel_for(int64_t num_chunks, const std::function<void(int64_t)>& fn);

// Convenience: splits [0, n) into chunks of size grain and runs
// fn(begin, end) per chunk.
void parallel_for_range(int64_t n, int64_t grain,
                        const std::function<void(int64_t, int64_t)>& fn);

}  // namespace panofield
