#pragma once

#include <cstddef>
#include <functional>

namespace butterfly {

/// Upper bound on worker threads used by data-parallel loops. Zero means
/// "use BUTTERFLY_THREADS, else hardware concurrency".
void set_max_threads(unsigned threads);
unsigned max_threads();

/// Runs body(i) for i in [0, count). Iterations must write to disjoint
/// outputs; results are then independent of scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace butterfly
