#pragma once

#include <cstddef>
#include <functional>

namespace melon {

// Worker count: MELON_THREADS if set and > 0, otherwise min(hardware, 8).
// MELON_THREADS=1 forces sequential execution.
unsigned thread_count();

// Runs body(i) for i in [0, n). Results must be written to per-index slots;
// the schedule is static so any thread count yields identical output.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace melon
