#pragma once

#include <cstdint>
#include <functional>

namespace codekit {

// Worker count: hardware concurrency capped by the CODEKIT_THREADS
// environment variable (values < 1 behave as 1).
unsigned worker_count();

// Splits [0, total) into one contiguous chunk per worker and runs fn(begin,
// end, slot) on each. Callers keep determinism by writing into slot-indexed
// partial results and merging them in slot order after the call returns.
void parallel_chunks(std::uint64_t total,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn);

}  // namespace codekit
