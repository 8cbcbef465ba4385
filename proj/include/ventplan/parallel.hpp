#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ventplan {

// Number of worker threads used when jobs <= 0 is requested.
inline int default_jobs() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Data-parallel loop over [0, n). jobs <= 1 runs the serial reference path;
// jobs > 1 runs the OpenMP kernel. Bodies must be independent per index and
// write only to their own output slot, so both paths produce bit-identical
// results. Exceptions thrown inside a parallel body must not escape an OpenMP
// region, so they are captured and rethrown after the loop.
template <typename F>
void parallel_for(std::size_t n, int jobs, F&& body) {
    if (jobs <= 0) jobs = default_jobs();
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
#ifdef _OPENMP
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
#else
    for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

}  // namespace ventplan
