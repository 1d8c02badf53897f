#pragma once

// Data-parallel reductions behind the verification harness.
//
// Every kernel has a serial reference in `kernels::serial` and an OpenMP version in
// `kernels::omp`; the harness calls the OpenMP ones. Both return bit-identical results:
// the only reduction is max, which is exact and order-independent.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <span>

#include "homeo/plane.hpp"
#include "homeo/sampling.hpp"

namespace homeo::kernels {

namespace detail {

// NaN compares as +infinity so a broken evaluation can never hide inside a max.
inline double fold_max(double acc, double v) {
    if (std::isnan(v)) return std::numeric_limits<double>::infinity();
    return v > acc ? v : acc;
}

}  // namespace detail

/// Largest |d f_i/d x_i - 1| and |d f_i/d x_j| (i != j) of the radial ball map over a sample set.
struct PartialDeviation {
    double diag = 0.0;
    double offdiag = 0.0;
};

namespace serial {

/// max_{0 <= i < n} f(i); -infinity for n == 0.
template <class F>
double max_over(std::size_t n, F&& f) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) m = detail::fold_max(m, f(i));
    return m;
}

PartialDeviation partial_deviation(double t, const SampleSet& samples);

/// Directed Hausdorff distance from the query points to the closed polyline through
/// `polyline` (last vertex joined to the first). Brute force over all segments.
double directed_to_polyline(std::span<const PlanePoint> queries, std::span<const PlanePoint> polyline);

}  // namespace serial

namespace omp {

template <class F>
double max_over(std::size_t n, F&& f) {
    double m = -std::numeric_limits<double>::infinity();
    std::exception_ptr error;
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel
    {
        double local = -std::numeric_limits<double>::infinity();
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < count; ++i) {
            try {
                local = detail::fold_max(local, f(static_cast<std::size_t>(i)));
            } catch (...) {
#pragma omp critical(homeo_kernel_error)
                if (!error) error = std::current_exception();
            }
        }
#pragma omp critical(homeo_kernel_max)
        m = detail::fold_max(m, local);
    }
    if (error) std::rethrow_exception(error);
    return m;
}

/// Calls f(i) for every i in [0, n), in parallel.
template <class F>
void for_each_index(std::size_t n, F&& f) {
    std::exception_ptr error;
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            f(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(homeo_kernel_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

PartialDeviation partial_deviation(double t, const SampleSet& samples);

/// Same result as the serial version; segments are bucketed in a uniform grid and each
/// query searches outward ring by ring until no unvisited cell can hold a closer segment.
double directed_to_polyline(std::span<const PlanePoint> queries, std::span<const PlanePoint> polyline);

}  // namespace omp

/// Distance from p to the segment [a, b].
double point_segment_distance(PlanePoint p, PlanePoint a, PlanePoint b);

/// Symmetric Hausdorff distance between two closed polylines.
double hausdorff_closed_polylines(std::span<const PlanePoint> a, std::span<const PlanePoint> b);

/// Number of threads OpenMP will use for the kernels (1 when built without OpenMP).
int thread_count();

}  // namespace homeo::kernels
