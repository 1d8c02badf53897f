#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "homeo/ball_maps.hpp"
#include "homeo/errors.hpp"
#include "homeo/sampling.hpp"

using namespace homeo;

namespace {

// Independent oracle: evaluates the map straight from its definition.
std::vector<double> f_oracle(double t, const std::vector<double>& x) {
    double n2 = 0.0;
    for (double v : x) n2 += v * v;
    const double d = 1.0 + (t - 1.0) * std::sqrt(n2);
    std::vector<double> out;
    for (double v : x) out.push_back(t * v / d);
    return out;
}

// Grid oracle for sup_s |f(s) - s| on [0, 1]: plain dense scan, no refinement.
double sup_grid(double t, int n) {
    double m = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double s = static_cast<double>(k) / n;
        m = std::max(m, std::abs(t * s / (1.0 + (t - 1.0) * s) - s));
    }
    return m;
}

}  // namespace

TEST(FApply, WorkedValues) {
    const BallPoint y = f_apply({2.0, 2}, BallPoint({0.5, 0.0}));
    EXPECT_NEAR(y[0], 2.0 / 3.0, 1e-15);
    EXPECT_EQ(y[1], 0.0);

    const BallPoint o = f_apply({3.7, 4}, BallPoint(std::vector<double>(4, 0.0)));
    for (double v : o.coords()) EXPECT_EQ(v, 0.0);

    const BallPoint x({0.3, -0.2, 0.1});
    const BallPoint same = f_apply({1.0, 3}, x);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(same[i], x[i]);
}

TEST(FApply, MatchesOracleAndFixesSphere) {
    for (int q : {2, 3, 7}) {
        const SampleSet ball = generate({11, 500, BallUniform{q}});
        const SampleSet sphere = generate({12, 200, Sphere{q}});
        for (double t : {0.2, 0.9, 1.3, 5.0}) {
            for (std::size_t i = 0; i < ball.size(); ++i) {
                std::vector<double> c(ball.point(i).begin(), ball.point(i).end());
                const auto want = f_oracle(t, c);
                const BallPoint got = f_apply({t, q}, BallPoint(c));
                for (int k = 0; k < q; ++k) EXPECT_NEAR(got[k], want[k], 1e-15);
            }
            for (std::size_t i = 0; i < sphere.size(); ++i) {
                std::vector<double> c(sphere.point(i).begin(), sphere.point(i).end());
                const BallPoint got = f_apply({t, q}, BallPoint(c));
                for (int k = 0; k < q; ++k) EXPECT_NEAR(got[k], c[k], 1e-14);
            }
        }
    }
}

TEST(FApply, PreservesRays) {
    const SampleSet ball = generate({13, 300, BallUniform{3}});
    for (std::size_t i = 0; i < ball.size(); ++i) {
        std::vector<double> c(ball.point(i).begin(), ball.point(i).end());
        const BallPoint x(c);
        const BallPoint y = f_apply({2.5, 3}, x);
        const double lambda = y.norm() / x.norm();
        for (int k = 0; k < 3; ++k) EXPECT_NEAR(y[k], lambda * x[k], 1e-15);
    }
}

TEST(FApply, Validation) {
    EXPECT_THROW(validate(RadialBallMapParams{0.0, 2}), InvalidParameter);
    EXPECT_THROW(validate(RadialBallMapParams{1.0, 1}), InvalidParameter);
    EXPECT_THROW(f_apply({1.5, 2}, BallPoint({0.9, 0.9})), DomainError);
    EXPECT_THROW(f_apply({1.5, 3}, BallPoint({0.1, 0.1})), DomainError);
}

TEST(FJacobian, WorkedValues) {
    const JacobianMatrix j = f_jacobian({2.0, 2}, BallPoint({0.5, 0.0}));
    EXPECT_NEAR(j(0, 0), 8.0 / 9.0, 1e-15);
    EXPECT_NEAR(j(1, 1), 4.0 / 3.0, 1e-15);
    EXPECT_EQ(j(0, 1), 0.0);
    EXPECT_EQ(j(1, 0), 0.0);

    const JacobianMatrix origin = f_jacobian({1.7, 3}, BallPoint(std::vector<double>(3, 0.0)));
    EXPECT_EQ(origin.max_abs_diff(JacobianMatrix::identity(3, 1.7)), 0.0);

    const JacobianMatrix id = f_jacobian({1.0, 4}, BallPoint({0.1, 0.2, -0.3, 0.4}));
    EXPECT_LT(id.max_abs_diff(JacobianMatrix::identity(4)), 1e-15);
}

TEST(FJacobian, RemovableSingularity) {
    for (double t : {0.5, 1.5, 3.0}) {
        const JacobianMatrix j = f_jacobian({t, 2}, BallPoint({1e-8 / std::sqrt(2.0), 1e-8 / std::sqrt(2.0)}));
        EXPECT_LT(j.max_abs_diff(JacobianMatrix::identity(2, t)), 1e-6);
    }
}

TEST(FJacobian, MatchesComplexStepOracle) {
    // complex-step derivative of the radial map: exact to round-off, independent of the formula
    const double t = 1.8;
    const std::vector<double> x{0.31, -0.22, 0.4};
    const JacobianMatrix j = f_jacobian({t, 3}, BallPoint(x));
    const double h = 1e-30;
    for (int col = 0; col < 3; ++col) {
        std::vector<std::complex<double>> z(x.begin(), x.end());
        z[col] += std::complex<double>(0.0, h);
        std::complex<double> n2 = 0.0;
        for (auto v : z) n2 += v * v;
        const std::complex<double> d = 1.0 + (t - 1.0) * std::sqrt(n2);
        for (int row = 0; row < 3; ++row) EXPECT_NEAR(j(row, col), (t * z[row] / d).imag() / h, 1e-14);
    }
}

TEST(ComposeLaw, WorkedValues) {
    EXPECT_EQ(f_compose_law_check(1.0, 1.0, BallPoint({0.3, 0.4})), 0.0);
    EXPECT_LT(f_compose_law_check(2.0, 3.0, BallPoint({0.25, 0.25})), 1e-12);
    EXPECT_LT(f_compose_law_check(0.5, 2.0, BallPoint({0.5, 0.0})), 1e-12);
}

TEST(SupNorm, ClosedFormAgainstGridOracle) {
    EXPECT_EQ(sup_norm_f_minus_id(1.0), 0.0);
    EXPECT_NEAR(sup_norm_f_minus_id(0.25), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(sup_norm_f_minus_id(4.0), 1.0 / 3.0, 1e-15);
    for (double t : {0.1, 0.25, 0.49, 0.81, 1.5, 2.0, 4.0, 9.0}) {
        const double grid = sup_grid(t, 200000);
        EXPECT_LE(grid, sup_norm_f_minus_id(t) + 1e-12);
        EXPECT_NEAR(grid, sup_norm_f_minus_id(t), 1e-9);
        if (t > 1.0) EXPECT_LE(sup_norm_f_minus_id(t), (t - 1.0) / 2.0);
    }
}

TEST(Bounds, WorkedValuesAndDomain) {
    EXPECT_DOUBLE_EQ(diag_partial_deviation_bound(1.5), 1.25);
    EXPECT_NEAR(diag_partial_deviation_bound(1.01), 0.0201, 1e-15);
    EXPECT_DOUBLE_EQ(offdiag_partial_bound(1.5), 0.75);
    EXPECT_DOUBLE_EQ(offdiag_partial_bound(2.0), 2.0);
    EXPECT_LT(diag_partial_deviation_bound(1.0 + 1e-9), 1e-8);
    EXPECT_THROW(diag_partial_deviation_bound(1.0), InvalidParameter);
    EXPECT_THROW(offdiag_partial_bound(0.5), InvalidParameter);
}

TEST(Bounds, HoldOnSampledBall) {
    for (int q : {2, 3}) {
        const SampleSet s = generate({21, 20000, BallUniform{q}});
        for (double t : {1.001, 1.1, 1.5, 2.0}) {
            double diag = 0.0, off = 0.0;
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::vector<double> c(s.point(i).begin(), s.point(i).end());
                const JacobianMatrix j = f_jacobian({t, q}, BallPoint(c));
                for (int a = 0; a < q; ++a) {
                    for (int b = 0; b < q; ++b) {
                        if (a == b) diag = std::max(diag, std::abs(j(a, b) - 1.0));
                        else off = std::max(off, std::abs(j(a, b)));
                    }
                }
            }
            EXPECT_LE(diag, diag_partial_deviation_bound(t));
            EXPECT_LE(off, offdiag_partial_bound(t));
        }
    }
}

TEST(C1Distance, WorkedValues) {
    EXPECT_EQ(c1_distance_to_identity({1.0, 2}, 1000), 0.0);
    EXPECT_LT(c1_distance_to_identity({1.0001, 2}, 1000), 0.001);

    double prev = INFINITY;
    for (int k = 1; k <= 10; ++k) {
        const double t = 1.0 + std::ldexp(1.0, -k);
        const double d = c1_distance_to_identity({t, 3}, 2000);
        EXPECT_LT(d, prev);
        EXPECT_LE(d, (t - 1.0) / 2.0 + (t * t - 1.0) + t * (t - 1.0));
        prev = d;
    }
}

TEST(C1Breakdown, ExactValuesForTwo) {
    // at t = 2: sup |f - id| = 3 - 2 sqrt 2, diag deviation peaks at the origin (t - 1),
    // off-diagonal sup t(t-1) s / (2 (1 + (t-1) s)^2) peaks at s = 1
    const SampleSet s = generate({0, 1000, BallUniform{2}});
    const C1Breakdown b = c1_breakdown({2.0, 2}, s.coords, 10000);
    EXPECT_NEAR(b.sup_f_minus_id, 3.0 - 2.0 * std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(b.max_diag_dev, 1.0, 1e-15);
    EXPECT_NEAR(b.max_offdiag, 0.25, 1e-12);
    EXPECT_DOUBLE_EQ(b.c1_distance, b.sup_f_minus_id + std::max(b.max_diag_dev, b.max_offdiag));
}
