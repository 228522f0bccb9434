#pragma once

#include <cstddef>
#include <functional>

namespace spherex {

// Worker cap: SPHEREX_THREADS environment variable, where 0 or unset means
// hardware concurrency.
int max_threads();

// Runs fn(i) for i in [0, count). Work is split into static contiguous
// chunks; callers keep determinism by writing to index-addressed slots and
// reducing sequentially afterwards.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace spherex
