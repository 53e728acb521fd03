#pragma once
// Tiny fork-join helper. Worker count honors the QCORR_THREADS environment
// variable (clamped to [1, hardware_concurrency]).

#include <cstddef>
#include <functional>

namespace qcorr {

std::size_t thread_count();

// Run fn(i) for i in [0, n) across thread_count() workers. fn must be safe to
// call concurrently for distinct i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace qcorr
