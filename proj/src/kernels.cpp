#include "homeo/kernels.hpp"

#include <algorithm>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "homeo/ball_maps.hpp"
#include "homeo/errors.hpp"

namespace homeo::kernels {

double point_segment_distance(PlanePoint p, PlanePoint a, PlanePoint b) {
    const PlanePoint ab = b - a;
    const PlanePoint ap = p - a;
    const double len2 = ab.x * ab.x + ab.y * ab.y;
    if (len2 == 0.0) return ap.norm();
    const double s = std::clamp((ap.x * ab.x + ap.y * ab.y) / len2, 0.0, 1.0);
    return distance(p, a + s * ab);
}

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

void check_polylines(std::span<const PlanePoint> queries, std::span<const PlanePoint> polyline) {
    if (queries.empty() || polyline.empty()) throw InvalidSpec("Hausdorff distance needs non-empty point sets");
}

PartialDeviation deviation_at(double t, std::span<const double> x, std::span<double> jac) {
    f_jacobian_into(t, x, jac);
    const std::size_t q = x.size();
    PartialDeviation d;
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            const double v = jac[i * q + j];
            if (i == j) {
                d.diag = detail::fold_max(d.diag, std::abs(v - 1.0));
            } else {
                d.offdiag = detail::fold_max(d.offdiag, std::abs(v));
            }
        }
    }
    return d;
}

// Uniform bucket grid over the segments of a closed polyline.
class SegmentGrid {
public:
    explicit SegmentGrid(std::span<const PlanePoint> vertices) : vertices_(vertices) {
        double min_x = vertices[0].x, max_x = min_x, min_y = vertices[0].y, max_y = min_y;
        for (const PlanePoint& v : vertices) {
            min_x = std::min(min_x, v.x);
            max_x = std::max(max_x, v.x);
            min_y = std::min(min_y, v.y);
            max_y = std::max(max_y, v.y);
        }
        const double extent = std::max(max_x - min_x, max_y - min_y);
        const auto side = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(vertices.size()))));
        cell_ = extent > 0.0 ? extent / static_cast<double>(side) : 1.0;
        origin_ = {min_x, min_y};
        nx_ = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor((max_x - min_x) / cell_)) + 1);
        ny_ = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor((max_y - min_y) / cell_)) + 1);

        // counting pass, then fill (CSR layout)
        const std::size_t m = vertices.size();
        std::vector<std::uint32_t> counts(static_cast<std::size_t>(nx_ * ny_) + 1, 0);
        for_each_cell_of_segments(m, [&](std::size_t cell, std::uint32_t) { ++counts[cell + 1]; });
        for (std::size_t c = 1; c < counts.size(); ++c) counts[c] += counts[c - 1];
        offsets_ = counts;
        items_.resize(offsets_.back());
        for_each_cell_of_segments(m, [&](std::size_t cell, std::uint32_t seg) { items_[counts[cell]++] = seg; });
    }

    double distance(PlanePoint p) const {
        const std::int64_t cx = cell_index(p.x - origin_.x);
        const std::int64_t cy = cell_index(p.y - origin_.y);
        const std::int64_t first_ring = std::max({std::int64_t{0}, -cx, cx - (nx_ - 1), -cy, cy - (ny_ - 1)});
        const std::int64_t last_ring = std::max({std::abs(cx), std::abs(cx - (nx_ - 1)), std::abs(cy), std::abs(cy - (ny_ - 1))});
        double best = std::numeric_limits<double>::infinity();
        for (std::int64_t r = first_ring; r <= last_ring; ++r) {
            visit_ring(cx, cy, r, [&](std::int64_t i, std::int64_t j) {
                const std::size_t cell = static_cast<std::size_t>(j * nx_ + i);
                for (std::uint32_t k = offsets_[cell]; k < offsets_[cell + 1]; ++k) {
                    const std::uint32_t s = items_[k];
                    best = std::min(best, point_segment_distance(p, vertices_[s], vertices_[next(s)]));
                }
            });
            // cells at ring r + 1 or beyond are at least r whole cells away from p
            if (best <= static_cast<double>(r) * cell_) break;
        }
        return best;
    }

private:
    std::size_t next(std::size_t s) const { return s + 1 == vertices_.size() ? 0 : s + 1; }

    std::int64_t cell_index(double offset) const { return static_cast<std::int64_t>(std::floor(offset / cell_)); }

    std::int64_t clamp_x(std::int64_t i) const { return std::clamp<std::int64_t>(i, 0, nx_ - 1); }
    std::int64_t clamp_y(std::int64_t j) const { return std::clamp<std::int64_t>(j, 0, ny_ - 1); }

    template <class Fn>
    void for_each_cell_of_segments(std::size_t m, Fn&& fn) const {
        for (std::size_t s = 0; s < m; ++s) {
            const PlanePoint a = vertices_[s];
            const PlanePoint b = vertices_[next(s)];
            const std::int64_t i0 = clamp_x(cell_index(std::min(a.x, b.x) - origin_.x));
            const std::int64_t i1 = clamp_x(cell_index(std::max(a.x, b.x) - origin_.x));
            const std::int64_t j0 = clamp_y(cell_index(std::min(a.y, b.y) - origin_.y));
            const std::int64_t j1 = clamp_y(cell_index(std::max(a.y, b.y) - origin_.y));
            for (std::int64_t j = j0; j <= j1; ++j) {
                for (std::int64_t i = i0; i <= i1; ++i) {
                    fn(static_cast<std::size_t>(j * nx_ + i), static_cast<std::uint32_t>(s));
                }
            }
        }
    }

    template <class Fn>
    void visit_ring(std::int64_t cx, std::int64_t cy, std::int64_t r, Fn&& fn) const {
        auto visit = [&](std::int64_t i, std::int64_t j) {
            if (i >= 0 && i < nx_ && j >= 0 && j < ny_) fn(i, j);
        };
        if (r == 0) {
            visit(cx, cy);
            return;
        }
        for (std::int64_t i = cx - r; i <= cx + r; ++i) {
            visit(i, cy - r);
            visit(i, cy + r);
        }
        for (std::int64_t j = cy - r + 1; j <= cy + r - 1; ++j) {
            visit(cx - r, j);
            visit(cx + r, j);
        }
    }

    std::span<const PlanePoint> vertices_;
    PlanePoint origin_;
    double cell_ = 1.0;
    std::int64_t nx_ = 1;
    std::int64_t ny_ = 1;
    std::vector<std::uint32_t> offsets_;
    std::vector<std::uint32_t> items_;
};

}  // namespace

namespace serial {

PartialDeviation partial_deviation(double t, const SampleSet& samples) {
    PartialDeviation total;
    std::vector<double> jac(samples.dim * samples.dim);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const PartialDeviation d = deviation_at(t, samples.point(i), jac);
        total.diag = detail::fold_max(total.diag, d.diag);
        total.offdiag = detail::fold_max(total.offdiag, d.offdiag);
    }
    return total;
}

double directed_to_polyline(std::span<const PlanePoint> queries, std::span<const PlanePoint> polyline) {
    check_polylines(queries, polyline);
    const std::size_t m = polyline.size();
    return max_over(queries.size(), [&](std::size_t i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t s = 0; s < m; ++s) {
            best = std::min(best, point_segment_distance(queries[i], polyline[s], polyline[(s + 1) % m]));
        }
        return best;
    });
}

}  // namespace serial

namespace omp {

PartialDeviation partial_deviation(double t, const SampleSet& samples) {
    const auto count = static_cast<std::int64_t>(samples.size());
    PartialDeviation total;
#pragma omp parallel
    {
        PartialDeviation local;
        std::vector<double> jac(samples.dim * samples.dim);
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < count; ++i) {
            const PartialDeviation d = deviation_at(t, samples.point(static_cast<std::size_t>(i)), jac);
            local.diag = detail::fold_max(local.diag, d.diag);
            local.offdiag = detail::fold_max(local.offdiag, d.offdiag);
        }
#pragma omp critical(homeo_kernel_partial)
        {
            total.diag = detail::fold_max(total.diag, local.diag);
            total.offdiag = detail::fold_max(total.offdiag, local.offdiag);
        }
    }
    return total;
}

double directed_to_polyline(std::span<const PlanePoint> queries, std::span<const PlanePoint> polyline) {
    check_polylines(queries, polyline);
    const SegmentGrid grid(polyline);
    return max_over(queries.size(), [&](std::size_t i) { return grid.distance(queries[i]); });
}

}  // namespace omp

double hausdorff_closed_polylines(std::span<const PlanePoint> a, std::span<const PlanePoint> b) {
    return std::max(omp::directed_to_polyline(a, b), omp::directed_to_polyline(b, a));
}

}  // namespace homeo::kernels
