#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cfcp {

/// Thread budget for the data-parallel kernels. threads <= 0 means "all
/// hardware threads". Every kernel in this codebase writes to disjoint
/// per-index slots or reduces over fixed-size blocks, so results are bitwise
/// identical for any thread count.
struct ExecPolicy {
    int threads = 1;

    int resolved() const {
#ifdef _OPENMP
        return threads <= 0 ? omp_get_max_threads() : threads;
#else
        return 1;
#endif
    }
};

template <typename Fn>
void parallel_for(std::size_t n, const ExecPolicy& exec, Fn&& fn) {
    const int nt = exec.resolved();
#ifdef _OPENMP
    if (nt > 1) {
#pragma omp parallel for schedule(static) num_threads(nt)
        for (long long i = 0; i < static_cast<long long>(n); ++i) fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    (void)nt;
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

/// Fixed blocking for deterministic parallel reductions: partials are
/// accumulated per block (parallel across blocks), then summed in block
/// order. Identical result for any thread count.
inline constexpr std::size_t kReduceBlock = 1024;

inline std::size_t block_count(std::size_t n) { return (n + kReduceBlock - 1) / kReduceBlock; }

} // namespace cfcp
