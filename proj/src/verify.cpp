#include "homeo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "homeo/errors.hpp"
#include "homeo/kernels.hpp"
#include "homeo/maximize.hpp"

namespace homeo {

const char* to_string(Relation r) {
    switch (r) {
        case Relation::LessEqual: return "<=";
        case Relation::Equal: return "=";
        case Relation::Less: return "<";
    }
    return "?";
}

bool relation_holds(double measured, double target, double tolerance, Relation relation) {
    switch (relation) {
        case Relation::LessEqual: return measured <= target + tolerance;
        case Relation::Equal: return std::abs(measured - target) <= tolerance;
        case Relation::Less: return measured < target + tolerance;
    }
    return false;
}

CheckResult CheckResult::make(std::string name, double measured, double target, double tolerance,
                              Relation relation, bool informational) {
    CheckResult c;
    c.name = std::move(name);
    c.measured = measured;
    c.target = target;
    c.tolerance = tolerance;
    c.relation = relation;
    c.passed = relation_holds(measured, target, tolerance, relation);
    c.informational = informational;
    return c;
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed || c.informational; });
}

std::vector<std::string> VerificationReport::failed_names() const {
    std::vector<std::string> out;
    for (const auto& c : checks) {
        if (!c.passed && !c.informational) out.push_back(c.name);
    }
    return out;
}

double sup_norm_estimate(const DeviationFn& deviation, const SampleSpec& spec) {
    if (spec.n == 0) throw InvalidSpec("sup-norm estimate needs at least one sample");
    if (const auto* grid = std::get_if<RadialGrid>(&spec.region)) {
        if (grid->q < 1) throw InvalidSpec("radial grid dimension must be positive");
        if (spec.n == 1) {
            std::vector<double> origin(static_cast<std::size_t>(grid->q), 0.0);
            return deviation(origin);
        }
        std::vector<double> x(static_cast<std::size_t>(grid->q), 0.0);
        auto along_axis = [&](double s) {
            x[0] = s;
            return deviation(x);
        };
        return maximize_on_interval(along_axis, 0.0, 1.0, spec.n).value;
    }
    const SampleSet samples = generate(spec);
    return kernels::omp::max_over(samples.size(), [&](std::size_t i) { return deviation(samples.point(i)); });
}

double roundtrip_max_error(const PlaneMap& forward, const PlaneMap& inverse, const SampleSpec& spec) {
    const std::vector<PlanePoint> pts = generate_plane(spec);
    return kernels::omp::max_over(pts.size(), [&](std::size_t i) { return distance(inverse(forward(pts[i])), pts[i]); });
}

double hausdorff_boundary_check(const CompositeMap& h, const ClosedDisc& src, const ClosedDisc& dst, std::size_t n) {
    if (n < 8) throw InvalidSpec("boundary Hausdorff check needs n >= 8");
    std::vector<PlanePoint> image = generate_plane({0, n, Circle{src.radius(), src.center()}});
    const std::vector<PlanePoint> target = generate_plane({0, n, Circle{dst.radius(), dst.center()}});
    kernels::omp::for_each_index(image.size(), [&](std::size_t i) { image[i] = composite_apply(h, image[i]); });
    return kernels::hausdorff_closed_polylines(image, target);
}

double boundary_identity_check(const CompositeMap& h, const SampleSpec& spec) {
    const std::vector<PlanePoint> pts = generate_plane(spec);
    return kernels::omp::max_over(pts.size(), [&](std::size_t i) { return distance(composite_apply(h, pts[i]), pts[i]); });
}

JacobianMatrix fd_jacobian(const VectorMap& map, const BallPoint& x, double step) {
    if (!(step > 0.0)) throw InvalidSpec("finite-difference step must be positive");
    if (!(x.norm() <= 1.0 - 2.0 * step)) {
        throw DomainError("finite-difference point needs |x| <= 1 - 2 step");
    }
    const std::size_t q = x.dim();
    JacobianMatrix jac(q);
    std::vector<double> plus(x.coords().begin(), x.coords().end());
    std::vector<double> minus = plus;
    std::vector<double> f_plus(q), f_minus(q);
    for (std::size_t j = 0; j < q; ++j) {
        plus[j] = x[j] + step;
        minus[j] = x[j] - step;
        map(plus, f_plus);
        map(minus, f_minus);
        for (std::size_t i = 0; i < q; ++i) jac(i, j) = (f_plus[i] - f_minus[i]) / (2.0 * step);
        plus[j] = x[j];
        minus[j] = x[j];
    }
    return jac;
}

CheckResult sigma_claim_probe(double a, double b, double eps, double delta, const SampleSpec& spec) {
    if (!(delta > 0.0 && delta < eps && eps < 1.0 - b)) {
        throw InvalidParameter("twist probe requires 0 < delta < eps < 1 - b");
    }
    const TwistParams wide{a, b, eps};
    const TwistParams narrow{a, b, delta};
    validate(wide);
    validate(narrow);
    const double measured = sup_norm_estimate(
        [&](std::span<const double> p) {
            const PlanePoint z{p[0], p[1]};
            return distance(twist_apply(wide, z), twist_apply(narrow, z));
        },
        spec);
    return CheckResult::make("twist.blend_width_claim", measured, eps - delta, 0.0, Relation::Less, true);
}

std::vector<C1Breakdown> convergence_sweep(int q, std::span<const double> t_values, const SampleSpec& spec) {
    if (q < 2) throw InvalidParameter("dimension q must be at least 2");
    if (t_values.empty()) throw InvalidParameter("convergence sweep needs at least one t");
    const auto* ball = std::get_if<BallUniform>(&spec.region);
    if (ball == nullptr || ball->q != q) throw InvalidSpec("convergence sweep samples must be BallUniform in dimension q");
    for (double t : t_values) {
        if (!(t >= 1.0) || !std::isfinite(t)) throw InvalidParameter("convergence sweep needs every t >= 1");
    }
    const SampleSet samples = generate(spec);
    std::vector<C1Breakdown> rows;
    rows.reserve(t_values.size());
    for (double t : t_values) rows.push_back(c1_breakdown({t, q}, samples.coords, spec.n));
    return rows;
}

std::vector<CheckResult> disc_swap_checks(const ClosedDisc& src, const ClosedDisc& dst, const CompositeMap& h,
                                          std::uint64_t seed, std::size_t samples, double tolerance_scale) {
    std::vector<CheckResult> checks;
    const CompositeMap h_inv = h.inverse();
    const double t = h.support_radius;

    checks.push_back(CheckResult::make("swap.discs_inside_support", std::max(src.outer_radius(), dst.outer_radius()),
                                       t, 0.0, Relation::Less));

    // interior points of src land in dst, and interior points of dst come from src
    const std::vector<PlanePoint> unit = generate_plane({seed, samples, DiscUniform{}});
    auto excess = [&](const CompositeMap& map, const ClosedDisc& from, const ClosedDisc& to) {
        return kernels::omp::max_over(unit.size(), [&](std::size_t i) {
            const PlanePoint z = from.center() + from.radius() * unit[i];
            return distance(composite_apply(map, z), to.center()) - to.radius();
        });
    };
    checks.push_back(CheckResult::make("swap.image_inside_target", excess(h, src, dst), 0.0,
                                       kCompositeTol * tolerance_scale, Relation::LessEqual));
    checks.push_back(CheckResult::make("swap.preimage_inside_source", excess(h_inv, dst, src), 0.0,
                                       kCompositeTol * tolerance_scale, Relation::LessEqual));

    checks.push_back(CheckResult::make("swap.boundary_hausdorff", hausdorff_boundary_check(h, src, dst, kHausdorffSamples),
                                       0.0, kHausdorffTol * tolerance_scale, Relation::Equal));

    const double outside = std::max(boundary_identity_check(h, {seed + 1, kIdentitySamples, Circle{(t + 1.0) / 2.0}}),
                                    boundary_identity_check(h, {seed + 2, kIdentitySamples, Circle{1.0}}));
    checks.push_back(CheckResult::make("swap.identity_outside_support", outside, 0.0, kExactTol * tolerance_scale,
                                       Relation::Equal));

    const double roundtrip = roundtrip_max_error([&](PlanePoint z) { return composite_apply(h, z); },
                                                 [&](PlanePoint z) { return composite_apply(h_inv, z); },
                                                 {seed + 3, samples, DiscUniform{}});
    checks.push_back(CheckResult::make("swap.roundtrip", roundtrip, 0.0, kCompositeTol * tolerance_scale, Relation::Equal));
    return checks;
}

}  // namespace homeo
