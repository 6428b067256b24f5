#pragma once

#include <cstddef>
#include <functional>

namespace ccl {

// Resolves the worker count: explicit value if > 0, else CCL_JOBS, else 1.
unsigned resolve_jobs(unsigned requested);

// Runs body(chunk) for chunk in [0, chunks) on up to `jobs` threads. Callers
// store per-chunk results and reduce them in chunk order afterwards, which
// keeps results independent of the thread count.
void parallel_chunks(std::size_t chunks, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace ccl
