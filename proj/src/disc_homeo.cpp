#include "homeo/disc_homeo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "homeo/errors.hpp"

namespace homeo {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void check_in_unit_disc(PlanePoint z) {
    if (!std::isfinite(z.x) || !std::isfinite(z.y)) throw DomainError("point is not finite");
    if (z.norm() > 1.0 + kUnitSlack) {
        throw DomainError("point (" + fmt(z.x) + ", " + fmt(z.y) + ") lies outside the closed unit disc");
    }
}

// Offset of y into the outer strips of the shear-translation; zero on the middle strip.
// The lower strip mirrors the upper one so the map is continuous across y = -delta and
// equals the identity on y = -2 delta.
double strip_offset(const TranslationParams& p, double y, StripRow row) {
    switch (row) {
        case StripRow::Upper: return y - p.delta;
        case StripRow::Middle: return 0.0;
        case StripRow::Lower: return -y - p.delta;
    }
    return 0.0;
}

StripRow strip_row(const TranslationParams& p, double y) {
    if (std::abs(y) <= p.delta) return StripRow::Middle;
    return y > 0.0 ? StripRow::Upper : StripRow::Lower;
}

StripColumn strip_column(const TranslationParams& p, double x) {
    if (x < -2.0 * p.delta || x > p.u + 2.0 * p.delta) return StripColumn::Outside;
    if (x <= p.u - p.delta) return StripColumn::Left;
    if (x <= p.u + p.delta) return StripColumn::Center;
    return StripColumn::Right;
}

bool inside_closed_rectangle(const TranslationParams& p, PlanePoint q) {
    return std::abs(q.y) <= 2.0 * p.delta && q.x >= -2.0 * p.delta && q.x <= p.u + 2.0 * p.delta;
}

// Slopes of the outer affine pieces of an x-slice at strip offset h.
double right_slope(const TranslationParams& p, double h) {
    const double k = (p.u + p.delta) / p.delta;
    return (1.0 / p.delta) * (1.0 - k) * h + k;
}

double left_slope(const TranslationParams& p, double h) {
    const double k = p.delta / (p.u + p.delta);
    return (1.0 / p.delta) * (1.0 - k) * h + k;
}

}  // namespace

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

void validate(const RadialExpansionParams& p) {
    const double la = p.alpha.norm();
    if (!std::isfinite(la) || !std::isfinite(p.rho) || !std::isfinite(p.delta)) {
        throw InvalidParameter("radial expansion parameters must be finite");
    }
    if (!(p.rho > 0.0 && p.rho < 1.0 - la)) {
        throw InvalidParameter("radial expansion requires 0 < rho < 1 - |alpha| (rho = " + fmt(p.rho) +
                               ", |alpha| = " + fmt(la) + ")");
    }
    if (!(p.delta >= 0.0 && la + p.rho + 2.0 * p.delta < 1.0)) {
        throw InvalidParameter("radial expansion requires 0 <= delta < (1 - |alpha| - rho)/2 (delta = " +
                               fmt(p.delta) + ")");
    }
}

void validate(const TwistParams& p) {
    if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.epsilon)) {
        throw InvalidParameter("twist parameters must be finite");
    }
    if (!(p.b >= 0.0 && p.b < 1.0)) {
        throw InvalidParameter("twist requires 0 <= b < 1 (b = " + fmt(p.b) + ")");
    }
    if (!(p.epsilon > 0.0 && p.epsilon < 1.0 - p.b)) {
        throw InvalidParameter("twist requires 0 < epsilon < 1 - b (epsilon = " + fmt(p.epsilon) + ")");
    }
}

void validate(const TranslationParams& p) {
    if (!std::isfinite(p.u) || !std::isfinite(p.delta)) {
        throw InvalidParameter("translation parameters must be finite");
    }
    if (!(p.u >= 0.0 && p.u < 1.0)) {
        throw InvalidParameter("translation requires 0 <= u < 1 (u = " + fmt(p.u) + ")");
    }
    if (!(p.delta > 0.0)) {
        throw InvalidParameter("translation requires delta > 0 (delta = " + fmt(p.delta) + ")");
    }
    // u >= 0 makes (u + 2 delta, +-2 delta) the farthest corners
    if (!(std::hypot(p.u + 2.0 * p.delta, 2.0 * p.delta) < 1.0)) {
        throw InvalidParameter("translation rectangle [-2 delta, u + 2 delta] x [-2 delta, 2 delta] must lie in the open unit disc");
    }
}

// ---------------------------------------------------------------------------
// Radial expansion
// ---------------------------------------------------------------------------

PlanePoint radial_expansion_branch(const RadialExpansionParams& p, PlanePoint z, RadialBranch branch) {
    const PlanePoint w = z - p.alpha;
    switch (branch) {
        case RadialBranch::Scale:
            return p.alpha + ((p.rho + p.delta) / p.rho) * w;
        case RadialBranch::Compress: {
            const double r = w.norm();
            const double target = (r - p.rho) / 2.0 + p.rho + p.delta;
            return p.alpha + (target / r) * w;
        }
        case RadialBranch::Identity:
            return z;
    }
    return z;
}

PlanePoint radial_expansion_apply(const RadialExpansionParams& p, PlanePoint z) {
    validate(p);
    check_in_unit_disc(z);
    const double r = distance(z, p.alpha);
    if (r <= p.rho) return radial_expansion_branch(p, z, RadialBranch::Scale);
    if (r <= p.rho + 2.0 * p.delta) return radial_expansion_branch(p, z, RadialBranch::Compress);
    return z;
}

PlanePoint radial_expansion_invert(const RadialExpansionParams& p, PlanePoint z) {
    validate(p);
    check_in_unit_disc(z);
    const PlanePoint w = z - p.alpha;
    const double s = w.norm();
    if (s <= p.rho + p.delta) return p.alpha + (p.rho / (p.rho + p.delta)) * w;
    if (s <= p.rho + 2.0 * p.delta) {
        const double source = 2.0 * (s - p.rho - p.delta) + p.rho;
        return p.alpha + (source / s) * w;
    }
    return z;
}

// ---------------------------------------------------------------------------
// Twist
// ---------------------------------------------------------------------------

double twist_branch_angle(const TwistParams& p, double r, TwistBranch branch) {
    switch (branch) {
        case TwistBranch::Rotate: return p.a;
        case TwistBranch::Blend: return -(p.a / p.epsilon) * (r - p.b) + p.a;
        case TwistBranch::Identity: return 0.0;
    }
    return 0.0;
}

PlanePoint twist_apply(const TwistParams& p, PlanePoint z) {
    validate(p);
    check_in_unit_disc(z);
    const double r = z.norm();
    if (r <= p.b) return rotate(z, twist_branch_angle(p, r, TwistBranch::Rotate));
    if (r <= p.b + p.epsilon) return rotate(z, twist_branch_angle(p, r, TwistBranch::Blend));
    return z;
}

PlanePoint twist_invert(const TwistParams& p, PlanePoint z) {
    return twist_apply(TwistParams{-p.a, p.b, p.epsilon}, z);
}

// ---------------------------------------------------------------------------
// Shear-translation
// ---------------------------------------------------------------------------

double translation_branch_x(const TranslationParams& p, double x, double y, StripRow row, StripColumn column) {
    const double h = strip_offset(p, y, row);
    const double u = p.u;
    const double d = p.delta;
    switch (column) {
        case StripColumn::Right: return right_slope(p, h) * (x - u - d) + (u / d) * h + d;
        case StripColumn::Center: return x + (u / d) * h - u;
        case StripColumn::Left: return left_slope(p, h) * (x + 2.0 * d) - 2.0 * d;
        case StripColumn::Outside: return x;
    }
    return x;
}

PlanePoint translation_apply(const TranslationParams& p, PlanePoint q) {
    validate(p);
    check_in_unit_disc(q);
    if (!inside_closed_rectangle(p, q)) return q;
    const double x = translation_branch_x(p, q.x, q.y, strip_row(p, q.y), strip_column(p, q.x));
    return {x, q.y};
}

PlanePoint translation_invert(const TranslationParams& p, PlanePoint q) {
    validate(p);
    check_in_unit_disc(q);
    if (!inside_closed_rectangle(p, q)) return q;
    const double h = strip_offset(p, q.y, strip_row(p, q.y));
    const double u = p.u;
    const double d = p.delta;
    // images of the interior breakpoints x = u - delta and x = u + delta
    const double left_break = (u / d) * h - d;
    const double right_break = (u / d) * h + d;
    double x;
    if (q.x <= left_break) {
        x = (q.x + 2.0 * d) / left_slope(p, h) - 2.0 * d;
    } else if (q.x <= right_break) {
        x = q.x - (u / d) * h + u;
    } else {
        x = (q.x - (u / d) * h - d) / right_slope(p, h) + u + d;
    }
    return {x, q.y};
}

// ---------------------------------------------------------------------------
// Chains
// ---------------------------------------------------------------------------

PlanePoint PrimitiveMap::apply(PlanePoint z) const {
    const bool fwd = direction == Direction::Forward;
    return std::visit(
        [&](const auto& p) -> PlanePoint {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, RadialExpansionParams>) {
                return fwd ? radial_expansion_apply(p, z) : radial_expansion_invert(p, z);
            } else if constexpr (std::is_same_v<P, TwistParams>) {
                return fwd ? twist_apply(p, z) : twist_invert(p, z);
            } else {
                return fwd ? translation_apply(p, z) : translation_invert(p, z);
            }
        },
        kind);
}

PrimitiveMap PrimitiveMap::inverse() const {
    return {kind, direction == Direction::Forward ? Direction::Inverse : Direction::Forward};
}

double support_radius(const PrimitiveMap& m) {
    return std::visit(
        [](const auto& p) -> double {
            validate(p);
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, RadialExpansionParams>) {
                return p.alpha.norm() + p.rho + 2.0 * p.delta;
            } else if constexpr (std::is_same_v<P, TwistParams>) {
                return p.b + p.epsilon;
            } else {
                return std::hypot(p.u + 2.0 * p.delta, 2.0 * p.delta);
            }
        },
        m.kind);
}

CompositeMap CompositeMap::inverse() const {
    CompositeMap inv;
    inv.support_radius = support_radius;
    inv.chain.reserve(chain.size());
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) inv.chain.push_back(it->inverse());
    return inv;
}

PlanePoint composite_apply(const CompositeMap& m, PlanePoint z) {
    check_in_unit_disc(z);
    for (const auto& step : m.chain) z = step.apply(z);
    return z;
}

// ---------------------------------------------------------------------------
// Disc swap
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxHalvings = 64;
constexpr int kMaxRadiusStages = 256;
constexpr double kRadiusMatch = 1e-15;

bool pad_width_feasible(double eps, const ClosedDisc& src, const ClosedDisc& dst) {
    const double ls = src.center().norm();
    const double ld = dst.center().norm();
    const double eta = 0.5 * std::min(1.0 - ls - eps, 1.0 - ld - eps);
    for (const ClosedDisc* disc : {&src, &dst}) {
        const double lg = disc->center().norm();
        const double r = disc->radius();
        if (!(lg + eps < 1.0)) return false;
        // growing r up to eps uses a radial expansion reaching out to radius 2 eps - r
        if (r < eps && !(lg + 2.0 * eps - r < 1.0)) return false;
        if (lg > 0.0) {
            if (!(std::hypot(lg + 2.0 * eps, 2.0 * eps) < 1.0)) return false;
            if (!(eta > 0.0 && lg + eps + eta < 1.0)) return false;
        }
    }
    return true;
}

// Radial-expansion steps about the disc center taking radius r to eps. Shrinking is staged
// so that every step keeps its outer radius strictly inside the unit disc.
void append_radius_steps(std::vector<PrimitiveMap>& chain, const ClosedDisc& disc, double eps) {
    const PlanePoint c = disc.center();
    const double r = disc.radius();
    if (std::abs(r - eps) <= kRadiusMatch) return;
    if (r < eps) {
        chain.push_back({RadialExpansionParams{c, r, eps - r}, Direction::Forward});
        return;
    }
    const double margin = 1.0 - c.norm();
    double current = r;
    for (int stage = 0; stage < kMaxRadiusStages; ++stage) {
        const double gap = margin - current;
        if (current - eps <= 0.5 * gap) {
            chain.push_back({RadialExpansionParams{c, eps, current - eps}, Direction::Inverse});
            return;
        }
        const double step = 0.5 * gap;
        const double inner = current - step;
        chain.push_back({RadialExpansionParams{c, inner, step}, Direction::Inverse});
        current = inner;
    }
    throw InfeasibleParameters("radius normalization did not converge");
}

// Chain taking `disc` onto D(0; eps).
std::vector<PrimitiveMap> centering_chain(const ClosedDisc& disc, const SwapParameters& sp) {
    std::vector<PrimitiveMap> chain;
    append_radius_steps(chain, disc, sp.epsilon);
    const double lg = disc.center().norm();
    if (lg > 0.0) {
        const double arg = to_polar(disc.center()).theta;
        chain.push_back({TwistParams{-arg, lg + sp.epsilon, sp.eta}, Direction::Forward});
        chain.push_back({TranslationParams{lg, sp.epsilon}, Direction::Forward});
    }
    return chain;
}

}  // namespace

SwapParameters select_swap_parameters(const ClosedDisc& src, const ClosedDisc& dst) {
    const double ls = src.center().norm();
    const double ld = dst.center().norm();
    double smallest = 1.0;
    for (double v : {ls, 1.0 - ls, ld, 1.0 - ld}) {
        if (v > 0.0) smallest = std::min(smallest, v);
    }
    double eps = smallest / 8.0;
    for (int i = 0; i < kMaxHalvings; ++i, eps *= 0.5) {
        if (pad_width_feasible(eps, src, dst)) {
            return {eps, 0.5 * std::min(1.0 - ls - eps, 1.0 - ld - eps)};
        }
    }
    throw InfeasibleParameters("no pad width satisfies the disc-swap containments after " +
                               std::to_string(kMaxHalvings) + " halvings");
}

CompositeMap plan_disc_swap(const ClosedDisc& src, const ClosedDisc& dst) {
    const SwapParameters sp = select_swap_parameters(src, dst);

    CompositeMap to_origin{centering_chain(src, sp), 0.0};
    CompositeMap from_origin = CompositeMap{centering_chain(dst, sp), 0.0}.inverse();

    CompositeMap h;
    h.chain = std::move(to_origin.chain);
    h.chain.insert(h.chain.end(), from_origin.chain.begin(), from_origin.chain.end());

    double t = 0.0;
    for (const auto& step : h.chain) t = std::max(t, support_radius(step));
    t += (1.0 - t) / 2.0;
    const double needed = std::max(src.outer_radius(), dst.outer_radius());
    while (!(needed < t)) {
        t += (1.0 - t) / 2.0;
        if (!(t < 1.0)) throw InfeasibleParameters("no support radius below 1 contains both discs");
    }
    h.support_radius = t;
    return h;
}

}  // namespace homeo
