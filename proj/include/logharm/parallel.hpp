#pragma once

#include <cstddef>
#include <exception>
#include <limits>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace logharm::par {

/// Effective thread count: OpenMP's default, capped by the LOGHARM_THREADS
/// environment variable when set (>= 1). Returns 1 in serial builds.
int threads();

/// Winner of a min-reduction: smallest value, ties broken by smallest index.
/// The rule is associative and commutative, so serial and parallel sweeps
/// produce bit-identical results regardless of scheduling.
struct MinResult {
    double value = std::numeric_limits<double>::infinity();
    std::size_t index = 0;
};

inline bool beats(double value, std::size_t index, const MinResult& best) {
    return value < best.value || (value == best.value && index < best.index);
}

namespace detail {

/// Deferred exception from a sweep body; the one at the smallest index wins
/// so failures are reproducible across thread counts.
struct FirstError {
    std::size_t index = std::numeric_limits<std::size_t>::max();
    std::exception_ptr error;

    void capture(std::size_t i) {
        if (i < index) {
            index = i;
            error = std::current_exception();
        }
    }
    void merge(const FirstError& other) {
        if (other.error && other.index < index) *this = other;
    }
    void rethrow_if_set() const {
        if (error) std::rethrow_exception(error);
    }
};

}  // namespace detail

/// Serial reference for the grid min-reduction. fn(i) -> double.
template <class Fn>
MinResult sweep_min_serial(std::size_t n, Fn&& fn) {
    MinResult best;
    detail::FirstError err;
    for (std::size_t i = 0; i < n; ++i) {
        if (err.error) break;
        try {
            const double v = fn(i);
            if (beats(v, i, best)) best = {v, i};
        } catch (...) {
            err.capture(i);
        }
    }
    err.rethrow_if_set();
    return best;
}

/// OpenMP kernel; reduction by the same (value, index) rule as the serial
/// reference, so the two agree exactly. Exceptions cannot cross the parallel
/// region: the one from the smallest index is captured and rethrown after.
template <class Fn>
MinResult sweep_min_parallel(std::size_t n, Fn&& fn) {
#ifdef _OPENMP
    MinResult best;
    detail::FirstError err;
#pragma omp parallel num_threads(threads())
    {
        MinResult local;
        detail::FirstError local_err;
#pragma omp for schedule(static) nowait
        for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
            const std::size_t i = static_cast<std::size_t>(ii);
            if (local_err.error) continue;
            try {
                const double v = fn(i);
                if (beats(v, i, local)) local = {v, i};
            } catch (...) {
                local_err.capture(i);
            }
        }
#pragma omp critical(logharm_sweep_merge)
        {
            if (beats(local.value, local.index, best)) best = local;
            err.merge(local_err);
        }
    }
    err.rethrow_if_set();
    return best;
#else
    return sweep_min_serial(n, std::forward<Fn>(fn));
#endif
}

/// Dispatch: parallel kernel unless the effective thread count is 1.
template <class Fn>
MinResult sweep_min(std::size_t n, Fn&& fn) {
    if (threads() > 1) return sweep_min_parallel(n, std::forward<Fn>(fn));
    return sweep_min_serial(n, std::forward<Fn>(fn));
}

/// Fill out[i] = fn(i) for i in [0, n), in parallel. Writes are disjoint, so
/// the result is identical to the serial loop.
template <class T, class Fn>
void fill_parallel(std::vector<T>& out, Fn&& fn) {
    const std::size_t n = out.size();
    detail::FirstError err;
#ifdef _OPENMP
#pragma omp parallel num_threads(threads())
    {
        detail::FirstError local_err;
#pragma omp for schedule(static) nowait
        for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
            const std::size_t i = static_cast<std::size_t>(ii);
            if (local_err.error) continue;
            try {
                out[i] = fn(i);
            } catch (...) {
                local_err.capture(i);
            }
        }
#pragma omp critical(logharm_fill_merge)
        err.merge(local_err);
    }
#else
    for (std::size_t i = 0; i < n; ++i) {
        try {
            out[i] = fn(i);
        } catch (...) {
            err.capture(i);
            break;
        }
    }
#endif
    err.rethrow_if_set();
}

}  // namespace logharm::par
