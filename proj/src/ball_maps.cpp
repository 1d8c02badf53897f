#include "homeo/ball_maps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "homeo/errors.hpp"
#include "homeo/kernels.hpp"
#include "homeo/maximize.hpp"
#include "homeo/plane.hpp"
#include "homeo/sampling.hpp"

namespace homeo {

namespace {

double euclidean_norm(std::span<const double> x) {
    double s = 0.0;
    for (double c : x) s += c * c;
    return std::sqrt(s);
}

void check_point(const RadialBallMapParams& p, const BallPoint& x) {
    if (x.dim() != static_cast<std::size_t>(p.q)) {
        throw DomainError("point has dimension " + std::to_string(x.dim()) + ", expected " + std::to_string(p.q));
    }
    const double n = x.norm();
    if (!std::isfinite(n)) throw DomainError("point is not finite");
    if (n > 1.0 + kUnitSlack) throw DomainError("point lies outside the closed unit ball");
}

void check_positive_t(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw InvalidParameter("t must be positive and finite");
}

void check_t_above_one(double t) {
    if (!(t > 1.0) || !std::isfinite(t)) throw InvalidParameter("bound holds for t > 1 only");
}

}  // namespace

void validate(const RadialBallMapParams& p) {
    check_positive_t(p.t);
    if (p.q < 2) throw InvalidParameter("dimension q must be at least 2 (got " + std::to_string(p.q) + ")");
}

double BallPoint::norm() const { return euclidean_norm(coords_); }

JacobianMatrix JacobianMatrix::identity(std::size_t q, double scale) {
    JacobianMatrix m(q);
    for (std::size_t i = 0; i < q; ++i) m(i, i) = scale;
    return m;
}

double JacobianMatrix::max_abs_diff(const JacobianMatrix& other) const {
    double m = 0.0;
    for (std::size_t k = 0; k < entries_.size(); ++k) m = std::max(m, std::abs(entries_[k] - other.entries_[k]));
    return m;
}

void f_apply_into(double t, std::span<const double> x, std::span<double> out) {
    const double scale = t / (1.0 + (t - 1.0) * euclidean_norm(x));
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = scale * x[i];
}

void f_jacobian_into(double t, std::span<const double> x, std::span<double> out) {
    const std::size_t q = x.size();
    const double n = euclidean_norm(x);
    if (n < kOriginThreshold) {
        for (std::size_t i = 0; i < q; ++i) {
            for (std::size_t j = 0; j < q; ++j) out[i * q + j] = i == j ? t : 0.0;
        }
        return;
    }
    const double denom = 1.0 + (t - 1.0) * n;
    const double diag = t / denom;
    const double outer = t * (t - 1.0) / (n * denom * denom);
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            out[i * q + j] = (i == j ? diag : 0.0) - outer * x[i] * x[j];
        }
    }
}

BallPoint f_apply(const RadialBallMapParams& p, const BallPoint& x) {
    validate(p);
    check_point(p, x);
    BallPoint out(std::vector<double>(x.dim()));
    f_apply_into(p.t, x.coords(), out.coords());
    return out;
}

JacobianMatrix f_jacobian(const RadialBallMapParams& p, const BallPoint& x) {
    validate(p);
    check_point(p, x);
    JacobianMatrix out(x.dim());
    std::vector<double> buf(x.dim() * x.dim());
    f_jacobian_into(p.t, x.coords(), buf);
    for (std::size_t i = 0; i < x.dim(); ++i) {
        for (std::size_t j = 0; j < x.dim(); ++j) out(i, j) = buf[i * x.dim() + j];
    }
    return out;
}

double f_compose_law_check(double s, double t, const BallPoint& x) {
    const int q = static_cast<int>(x.dim());
    const BallPoint inner = f_apply({t, q}, x);
    const BallPoint composed = f_apply({s, q}, inner);
    const BallPoint direct = f_apply({s * t, q}, x);
    double d2 = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) d2 += (composed[i] - direct[i]) * (composed[i] - direct[i]);
    return std::sqrt(d2);
}

double sup_norm_f_minus_id(double t) {
    check_positive_t(t);
    // attained on the sphere of radius 1 / (1 + sqrt(t))
    const double r = std::sqrt(t);
    return std::abs(r - 1.0) / (r + 1.0);
}

double diag_partial_deviation_bound(double t) {
    check_t_above_one(t);
    return t * t - 1.0;
}

double offdiag_partial_bound(double t) {
    check_t_above_one(t);
    return t * (t - 1.0);
}

C1Breakdown c1_breakdown(const RadialBallMapParams& p, std::span<const double> ball_samples,
                         std::size_t radial_grid) {
    validate(p);
    const auto q = static_cast<std::size_t>(p.q);
    if (ball_samples.size() % q != 0) throw InvalidSpec("sample buffer is not a multiple of q");

    C1Breakdown out;
    out.t = p.t;

    std::vector<double> x(q, 0.0), fx(q, 0.0);
    auto radial_deviation = [&](double s) {
        std::fill(x.begin(), x.end(), 0.0);
        x[0] = s;
        f_apply_into(p.t, x, fx);
        return std::abs(fx[0] - x[0]);
    };
    out.sup_f_minus_id = maximize_on_interval(radial_deviation, 0.0, 1.0, std::max<std::size_t>(radial_grid, 2)).value;

    // structured probes: origin, axis ray and two-coordinate diagonal ray
    const std::size_t rays = std::clamp<std::size_t>(radial_grid, 2, 1024);
    SampleSet probes;
    probes.dim = q;
    probes.coords.assign((2 * rays + 1) * q, 0.0);
    const double diag_scale = 1.0 / std::numbers::sqrt2;
    for (std::size_t k = 0; k < rays; ++k) {
        const double s = static_cast<double>(k + 1) / static_cast<double>(rays);
        probes.coords[(1 + k) * q] = s;
        probes.coords[(1 + rays + k) * q] = s * diag_scale;
        probes.coords[(1 + rays + k) * q + 1] = s * diag_scale;
    }
    SampleSet random;
    random.dim = q;
    random.coords.assign(ball_samples.begin(), ball_samples.end());

    const kernels::PartialDeviation a = kernels::omp::partial_deviation(p.t, probes);
    const kernels::PartialDeviation b = random.size() > 0 ? kernels::omp::partial_deviation(p.t, random)
                                                          : kernels::PartialDeviation{};
    out.max_diag_dev = std::max(a.diag, b.diag);
    out.max_offdiag = std::max(a.offdiag, b.offdiag);
    out.c1_distance = out.sup_f_minus_id + std::max(out.max_diag_dev, out.max_offdiag);
    return out;
}

double c1_distance_to_identity(const RadialBallMapParams& p, int n_samples) {
    validate(p);
    if (n_samples < 1) throw InvalidSpec("n_samples must be at least 1");
    const SampleSet samples = generate({0, static_cast<std::size_t>(n_samples), BallUniform{p.q}});
    return c1_breakdown(p, samples.coords, static_cast<std::size_t>(n_samples)).c1_distance;
}

}  // namespace homeo
