#pragma once

#include <cstddef>
#include <functional>

namespace drg {

// Worker count used by the library's parallel loops (default: hardware
// concurrency).  Results never depend on it.
void set_thread_count(std::size_t threads);
std::size_t thread_count();

// Calls body(i) for i in [0, n), splitting the range into contiguous chunks.
// The first exception thrown by any worker is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace drg
