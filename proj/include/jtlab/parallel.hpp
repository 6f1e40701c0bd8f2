#pragma once

#include <exception>
#include <limits>
#include <vector>

#ifdef JTLAB_HAS_OPENMP
#include <omp.h>
#endif

// Sample sweeps: the parallel kernel evaluates per-index values concurrently and
// reduces serially in index order, so results are bitwise identical to the serial
// reference for any thread count.

namespace jtlab::par {

template <class F>
double max_over_serial(int count, F&& f) {
    double m = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < count; ++i) {
        const double v = f(i);
        if (v > m) m = v;
    }
    return m;
}

template <class F>
double max_over_parallel(int count, F&& f) {
    std::vector<double> vals(static_cast<size_t>(count));
    std::exception_ptr err = nullptr;
#ifdef JTLAB_HAS_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < count; ++i) {
        try {
            vals[static_cast<size_t>(i)] = f(i);
        } catch (...) {
#ifdef JTLAB_HAS_OPENMP
#pragma omp critical
#endif
            {
                if (!err) err = std::current_exception();
            }
            vals[static_cast<size_t>(i)] = std::numeric_limits<double>::quiet_NaN();
        }
    }
    if (err) std::rethrow_exception(err);
    double m = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < count; ++i)
        if (vals[static_cast<size_t>(i)] > m) m = vals[static_cast<size_t>(i)];
    return m;
}

template <class F>
double max_over(int count, F&& f) {
#ifdef JTLAB_HAS_OPENMP
    if (count > 1) return max_over_parallel(count, f);
#endif
    return max_over_serial(count, f);
}

} // namespace jtlab::par
