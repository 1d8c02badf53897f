#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "homeo/errors.hpp"
#include "homeo/verify.hpp"

using namespace homeo;

namespace {

DeviationFn radial_deviation(double t) {
    return [t](std::span<const double> x) {
        std::vector<double> y(x.size());
        f_apply_into(t, x, y);
        double n2 = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) n2 += (y[i] - x[i]) * (y[i] - x[i]);
        return std::sqrt(n2);
    };
}

VectorMap radial_map(double t) {
    return [t](std::span<const double> x, std::span<double> out) { f_apply_into(t, x, out); };
}

// (1 - 2 sqrt t + t) / |1 - t|, the maximum of |t s / (1 + (t-1) s) - s| over s in [0, 1]
double closed_form(double t) { return (1.0 - 2.0 * std::sqrt(t) + t) / std::abs(1.0 - t); }

}  // namespace

TEST(Relation, Semantics) {
    EXPECT_TRUE(relation_holds(1.0, 1.0, 0.0, Relation::LessEqual));
    EXPECT_FALSE(relation_holds(1.0, 1.0, 0.0, Relation::Less));
    EXPECT_TRUE(relation_holds(1.0 + 1e-13, 1.0, 1e-12, Relation::Equal));
    EXPECT_FALSE(relation_holds(0.9, 1.0, 0.05, Relation::Equal));
    EXPECT_FALSE(relation_holds(NAN, 1.0, 1.0, Relation::LessEqual));
    EXPECT_STREQ(to_string(Relation::Less), "<");
}

TEST(Report, InformationalChecksNeverFail) {
    VerificationReport r;
    r.checks.push_back(CheckResult::make("a", 1.0, 0.0, 0.0, Relation::LessEqual, true));
    r.checks.push_back(CheckResult::make("b", 0.0, 0.0, 0.0, Relation::Equal));
    EXPECT_TRUE(r.all_passed());
    r.checks.push_back(CheckResult::make("c", 2.0, 1.0, 0.5, Relation::Less));
    EXPECT_FALSE(r.all_passed());
    EXPECT_EQ(r.failed_names(), std::vector<std::string>{"c"});
}

TEST(SupNormEstimate, WorkedValues) {
    EXPECT_EQ(sup_norm_estimate([](std::span<const double>) { return 0.0; }, {0, 100, DiscUniform{}}), 0.0);
    EXPECT_NEAR(sup_norm_estimate(radial_deviation(0.25), {0, 10000, RadialGrid{2}}), 1.0 / 3.0, 1e-10);
    const double four = sup_norm_estimate(radial_deviation(4.0), {0, 10000, RadialGrid{3}});
    EXPECT_NEAR(four, 1.0 / 3.0, 1e-10);
    EXPECT_LE(four, 1.5);
    EXPECT_THROW(sup_norm_estimate(radial_deviation(2.0), {0, 0, RadialGrid{2}}), InvalidSpec);
}

TEST(SupNormEstimate, NeverExceedsClosedForm) {
    for (double t : {0.3, 0.7, 1.2, 3.0}) {
        EXPECT_LE(sup_norm_estimate(radial_deviation(t), {1, 5000, BallUniform{3}}), closed_form(t) + 1e-12);
        EXPECT_NEAR(sup_norm_estimate(radial_deviation(t), {1, 10000, RadialGrid{3}}), closed_form(t), 1e-10);
    }
}

TEST(Roundtrip, WorkedValues) {
    const PlaneMap id = [](PlanePoint z) { return z; };
    EXPECT_EQ(roundtrip_max_error(id, id, {0, 1000, DiscUniform{}}), 0.0);
    const RadialExpansionParams p{{0.2, 0.0}, 0.1, 0.05};
    EXPECT_LT(roundtrip_max_error([&](PlanePoint z) { return radial_expansion_apply(p, z); },
                                  [&](PlanePoint z) { return radial_expansion_invert(p, z); }, {0, 10000, DiscUniform{}}),
              1e-12);
}

TEST(Hausdorff, EmptyChainAndCoarseSampling) {
    const ClosedDisc d({0.2, 0.1}, 0.3);
    EXPECT_LT(hausdorff_boundary_check(CompositeMap{}, d, d, 4096), 1e-15);
    EXPECT_THROW(hausdorff_boundary_check(CompositeMap{}, d, d, 7), InvalidSpec);

    const ClosedDisc src({0.3, 0.0}, 0.05);
    const ClosedDisc dst({0.0, -0.4}, 0.1);
    const CompositeMap h = plan_disc_swap(src, dst);
    EXPECT_LT(hausdorff_boundary_check(h, src, dst, 8), 0.1);
    EXPECT_LT(hausdorff_boundary_check(h, src, dst, 4096), 1e-6);
}

TEST(BoundaryIdentity, EmptyChainAndPlannerOutput) {
    EXPECT_EQ(boundary_identity_check(CompositeMap{}, {0, 1024, Circle{0.9}}), 0.0);
    const CompositeMap h = plan_disc_swap(ClosedDisc({-0.5, 0.3}, 0.1), ClosedDisc({0.1, 0.6}, 0.2));
    EXPECT_LT(boundary_identity_check(h, {0, 1024, Circle{(h.support_radius + 1.0) / 2.0}}), 1e-12);
    EXPECT_LT(boundary_identity_check(h, {0, 1024, Circle{1.0}}), 1e-12);
}

TEST(FdJacobian, WorkedValues) {
    const VectorMap id = [](std::span<const double> x, std::span<double> out) { std::copy(x.begin(), x.end(), out.begin()); };
    EXPECT_LT(fd_jacobian(id, BallPoint({0.3, -0.1, 0.2}), 1e-5).max_abs_diff(JacobianMatrix::identity(3)), 1e-10);

    const JacobianMatrix j = fd_jacobian(radial_map(2.0), BallPoint({0.5, 0.0}), 1e-5);
    EXPECT_NEAR(j(0, 0), 8.0 / 9.0, 1e-6);
    EXPECT_NEAR(j(1, 1), 4.0 / 3.0, 1e-6);
    EXPECT_NEAR(j(0, 1), 0.0, 1e-6);

    const BallPoint x({0.06, 0.08});
    EXPECT_LT(fd_jacobian(radial_map(1.5), x, 1e-5).max_abs_diff(f_jacobian({1.5, 2}, x)), 1e-6);

    EXPECT_THROW(fd_jacobian(id, BallPoint({0.99999, 0.0}), 1e-5), DomainError);
    EXPECT_THROW(fd_jacobian(id, BallPoint({0.1, 0.0}), 0.0), InvalidSpec);
}

TEST(FdJacobian, SecondOrderConvergence) {
    // a tenfold smaller step cuts the truncation error a hundredfold
    for (double t : {0.3, 3.0}) {
        for (const auto& c : {std::vector<double>{0.1, 0.05}, std::vector<double>{0.2, -0.1, 0.05}}) {
            const BallPoint x(c);
            const RadialBallMapParams p{t, static_cast<int>(c.size())};
            const double coarse = fd_jacobian(radial_map(t), x, 1e-4).max_abs_diff(f_jacobian(p, x));
            const double fine = fd_jacobian(radial_map(t), x, 1e-5).max_abs_diff(f_jacobian(p, x));
            const double ratio = coarse / fine;
            EXPECT_GE(ratio, 50.0) << "t=" << t;
            EXPECT_LE(ratio, 200.0) << "t=" << t;
        }
    }
}

TEST(SigmaProbe, WorkedValues) {
    const SampleSpec grid{0, 10000, RadialGrid{2}};
    const CheckResult zero = sigma_claim_probe(0.0, 0.5, 0.3, 0.15, grid);
    EXPECT_EQ(zero.measured, 0.0);
    EXPECT_TRUE(zero.passed);
    EXPECT_TRUE(zero.informational);

    EXPECT_TRUE(sigma_claim_probe(0.05, 0.5, 0.3, 0.15, grid).passed);

    const CheckResult big = sigma_claim_probe(std::numbers::pi, 0.5, 0.3, 0.15, grid);
    // hand computation: at r = 0.65 the angles are pi/2 and 0, chord 0.65 sqrt 2
    EXPECT_NEAR(big.measured, 0.65 * std::sqrt(2.0), 1e-9);
    EXPECT_FALSE(big.passed);
    EXPECT_TRUE(big.informational);

    EXPECT_THROW(sigma_claim_probe(1.0, 0.5, 0.1, 0.2, grid), InvalidParameter);
}

TEST(SigmaProbe, NarrowingGapConvergesMonotonically) {
    double prev = INFINITY;
    for (double delta : {0.1, 0.2, 0.25, 0.29, 0.299}) {
        const double m = sigma_claim_probe(2.0, 0.4, 0.3, delta, {0, 4000, RadialGrid{2}}).measured;
        EXPECT_LT(m, prev);
        prev = m;
    }
    EXPECT_LT(prev, 0.01);
}

TEST(ConvergenceSweep, WorkedValues) {
    const std::vector<double> one{1.0};
    const auto degenerate = convergence_sweep(2, one, {0, 100, BallUniform{2}});
    ASSERT_EQ(degenerate.size(), 1u);
    EXPECT_EQ(degenerate[0].c1_distance, 0.0);

    for (int q : {2, 5}) {
        std::vector<double> ts;
        for (int k = 0; k <= 10; ++k) ts.push_back(1.0 + std::ldexp(1.0, -k));
        const auto rows = convergence_sweep(q, ts, {0, 2000, BallUniform{q}});
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const double t = rows[k].t;
            EXPECT_LE(rows[k].c1_distance, (t - 1) / 2 + (t * t - 1) + t * (t - 1));
            if (k > 0) EXPECT_LT(rows[k].c1_distance, rows[k - 1].c1_distance);
        }
        EXPECT_LT(rows.back().c1_distance, rows.front().c1_distance / 100.0);
    }
}

TEST(ConvergenceSweep, Errors) {
    const std::vector<double> ts{1.5};
    const std::vector<double> below{0.5};
    EXPECT_THROW(convergence_sweep(1, ts, {0, 10, BallUniform{1}}), InvalidParameter);
    EXPECT_THROW(convergence_sweep(2, std::vector<double>{}, {0, 10, BallUniform{2}}), InvalidParameter);
    EXPECT_THROW(convergence_sweep(2, below, {0, 10, BallUniform{2}}), InvalidParameter);
    EXPECT_THROW(convergence_sweep(3, ts, {0, 10, BallUniform{2}}), InvalidSpec);
}

TEST(DiscSwapChecks, ToleranceScaleZeroFailsLooseChecks) {
    const ClosedDisc src({0.3, 0.0}, 0.05);
    const ClosedDisc dst({0.0, -0.4}, 0.1);
    const CompositeMap h = plan_disc_swap(src, dst);
    const auto ok = disc_swap_checks(src, dst, h, 0, 2000);
    for (const auto& c : ok) EXPECT_TRUE(c.passed) << c.name;
    const auto strict = disc_swap_checks(src, dst, h, 0, 2000, 0.0);
    bool any_failed = false;
    for (const auto& c : strict) any_failed |= !c.passed;
    EXPECT_TRUE(any_failed);
    // every flag is recomputable from the recorded fields
    for (const auto& c : strict) EXPECT_EQ(c.passed, relation_holds(c.measured, c.target, c.tolerance, c.relation));
}
