#pragma once

#include <cstddef>
#include <functional>

namespace talbot {

/// Worker count: TALBOT_THREADS if set and positive, else hardware concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) across worker_count() threads. Each index is
/// processed exactly once and results must be written to index-owned slots, so
/// the outcome never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace talbot
