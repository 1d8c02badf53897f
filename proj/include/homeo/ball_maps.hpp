#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace homeo {

/// Parameters of the radial family f(x) = t x / (1 + (t - 1) |x|) on the closed unit ball of R^q.
struct RadialBallMapParams {
    double t = 1.0;
    int q = 2;
};

/// Throws InvalidParameter unless t > 0 and q >= 2.
void validate(const RadialBallMapParams& p);

/// A point of the closed unit ball.
class BallPoint {
public:
    BallPoint() = default;
    explicit BallPoint(std::vector<double> coords) : coords_(std::move(coords)) {}

    std::size_t dim() const { return coords_.size(); }
    double norm() const;

    double operator[](std::size_t i) const { return coords_[i]; }
    double& operator[](std::size_t i) { return coords_[i]; }

    std::span<const double> coords() const { return coords_; }
    std::span<double> coords() { return coords_; }

private:
    std::vector<double> coords_;
};

/// Row-major q x q matrix of partial derivatives d f_i / d x_j.
class JacobianMatrix {
public:
    explicit JacobianMatrix(std::size_t q) : q_(q), entries_(q * q, 0.0) {}

    static JacobianMatrix identity(std::size_t q, double scale = 1.0);

    std::size_t dim() const { return q_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * q_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return entries_[i * q_ + j]; }

    std::span<const double> entries() const { return entries_; }

    /// Largest entrywise absolute difference.
    double max_abs_diff(const JacobianMatrix& other) const;

private:
    std::size_t q_;
    std::vector<double> entries_;
};

/// Below this norm the Jacobian takes its removable-singularity value t * I.
inline constexpr double kOriginThreshold = 1e-14;

// Span-based kernels. `out` must have x.size() entries (q * q for the Jacobian).
// They skip parameter validation and are meant for hot loops over validated inputs.
void f_apply_into(double t, std::span<const double> x, std::span<double> out);
void f_jacobian_into(double t, std::span<const double> x, std::span<double> out);

BallPoint f_apply(const RadialBallMapParams& p, const BallPoint& x);
JacobianMatrix f_jacobian(const RadialBallMapParams& p, const BallPoint& x);

/// |f^(s)(f^(t)(x)) - f^(st)(x)|.
double f_compose_law_check(double s, double t, const BallPoint& x);

/// Exact sup over the ball of |f^(t)(x) - x|, equal to |sqrt(t) - 1| / (sqrt(t) + 1).
double sup_norm_f_minus_id(double t);

/// Upper bound t^2 - 1 on sup |d f_i/d x_i - 1| for t > 1.
double diag_partial_deviation_bound(double t);

/// Upper bound t (t - 1) on sup |d f_i/d x_j|, i != j, for t > 1.
double offdiag_partial_bound(double t);

/// Components of the C1 distance between f^(t) and the identity.
struct C1Breakdown {
    double t = 1.0;
    double sup_f_minus_id = 0.0;  ///< radial maximization, exact to ~1e-12
    double max_diag_dev = 0.0;    ///< sampled sup of |d f_i/d x_i - 1|
    double max_offdiag = 0.0;     ///< sampled sup of |d f_i/d x_j|, i != j
    double c1_distance = 0.0;     ///< sup_f_minus_id + max(max_diag_dev, max_offdiag)
};

/// C1 breakdown over the given ball samples (row-major, q columns) plus a fixed set of
/// structured probes: the origin and the coordinate-axis and two-coordinate diagonal rays.
/// `radial_grid` is the grid size for the 1-D maximization of |f - id|.
C1Breakdown c1_breakdown(const RadialBallMapParams& p, std::span<const double> ball_samples,
                         std::size_t radial_grid);

/// c1_breakdown with `n_samples` seeded (seed 0) uniform ball points and an n_samples radial grid.
double c1_distance_to_identity(const RadialBallMapParams& p, int n_samples);

}  // namespace homeo
