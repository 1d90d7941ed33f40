#pragma once

#include <cstddef>
#include <functional>

namespace rcoptoric {

/// Worker threads allowed for internal parallelism: hardware concurrency,
/// capped by the RCOP_TORIC_THREADS environment variable when set. At
/// least 1.
unsigned thread_budget();

/// Runs body(k) once for every k in [0, n), spread over the thread budget.
/// Bodies must only write to per-index slots; results must be merged by the
/// caller in index order so outputs stay deterministic.
void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace rcoptoric
