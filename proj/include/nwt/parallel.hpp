// parallel.hpp — serial reference and OpenMP execution of data-parallel index loops
//
// Every parallel kernel in the library runs through for_each_index. threads == 1
// selects the plain serial loop, which is kept as the reference implementation
// for correctness tests and benchmarks; threads == 0 uses all hardware threads.
// Work is written to per-index slots (never reduced in thread order), so results
// are bit-identical for any thread count.
#pragma once

#include <cstddef>
#include <exception>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nwt::par {

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// 0 => all available; negative treated as 1
inline int resolve_threads(int requested) {
    if (requested == 0) return hardware_threads();
    return requested < 1 ? 1 : requested;
}

// Serial reference path.
template <class Fn>
void for_each_index_serial(std::size_t n, Fn&& fn) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

// OpenMP path. Exceptions thrown by fn are captured and rethrown on the
// calling thread (first one wins).
template <class Fn>
void for_each_index_omp(std::size_t n, int threads, Fn&& fn) {
#ifdef _OPENMP
    std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(nwt_par_error)
            if (!first_error) first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);
#else
    (void)threads;
    for_each_index_serial(n, std::forward<Fn>(fn));
#endif
}

template <class Fn>
void for_each_index(std::size_t n, int threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (threads == 1 || n < 2) {
        for_each_index_serial(n, std::forward<Fn>(fn));
    } else {
        for_each_index_omp(n, threads, std::forward<Fn>(fn));
    }
}

// Sum of term(i) for i in [0, n). Blocks of fixed size are summed serially and
// the block partials are combined in index order, so the result does not depend
// on the thread count.
template <class Fn>
double block_sum(std::size_t n, int threads, Fn&& term, std::size_t block = 1024) {
    if (n == 0) return 0.0;
    const std::size_t n_blocks = (n + block - 1) / block;
    std::vector<double> partial(n_blocks, 0.0);
    for_each_index(n_blocks, threads, [&](std::size_t b) {
        const std::size_t lo = b * block;
        const std::size_t hi = lo + block < n ? lo + block : n;
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += term(i);
        partial[b] = s;
    });
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

} // namespace nwt::par
