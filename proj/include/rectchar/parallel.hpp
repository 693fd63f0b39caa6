#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace rectchar {

/// Worker count: RECTCHAR_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int configured_threads();

/// Runs body(i) for i in [0, count) on up to configured_threads() workers.
/// Each index runs exactly once; the first exception is rethrown after all
/// workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace rectchar
