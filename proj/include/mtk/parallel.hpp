#pragma once

#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace mtk {

/// Execution policy for the data-parallel kernels. Every kernel has a serial
/// reference path; results are identical by contract regardless of schedule,
/// because loop bodies only write their own slot and reductions are merged
/// in canonical order after the loop.
enum class Exec { serial, parallel };

template <class Body>
void parallel_for(std::size_t n, Exec exec, Body&& body) {
#if defined(_OPENMP)
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            body(static_cast<std::size_t>(i));
        }
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) {
        body(i);
    }
}

} // namespace mtk
