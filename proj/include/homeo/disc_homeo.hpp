#pragma once

#include <variant>
#include <vector>

#include "homeo/plane.hpp"

namespace homeo {

// ---------------------------------------------------------------------------
// Parameter families
// ---------------------------------------------------------------------------

/// Radial expansion about `alpha`: the disc of radius rho grows to rho + delta
/// and the annulus [rho, rho + 2 delta] is compressed onto [rho + delta, rho + 2 delta].
/// Requires 0 < rho and |alpha| + rho + 2 delta < 1 with delta >= 0.
struct RadialExpansionParams {
    PlanePoint alpha;
    double rho = 0.0;
    double delta = 0.0;
};

/// Annular twist: rotation by `a` on the disc of radius b, blended linearly in r
/// down to the identity at radius b + epsilon. Requires 0 <= b < 1 and 0 < epsilon < 1 - b.
struct TwistParams {
    double a = 0.0;
    double b = 0.0;
    double epsilon = 0.0;
};

/// Shear-translation carrying the square [u - delta, u + delta] x [-delta, delta]
/// onto [-delta, delta]^2, identity off the open rectangle (-2 delta, u + 2 delta) x (-2 delta, 2 delta).
struct TranslationParams {
    double u = 0.0;
    double delta = 0.0;
};

void validate(const RadialExpansionParams& p);
void validate(const TwistParams& p);
void validate(const TranslationParams& p);

// ---------------------------------------------------------------------------
// Primitive evaluation
// ---------------------------------------------------------------------------

PlanePoint radial_expansion_apply(const RadialExpansionParams& p, PlanePoint z);
PlanePoint radial_expansion_invert(const RadialExpansionParams& p, PlanePoint z);

PlanePoint twist_apply(const TwistParams& p, PlanePoint z);
PlanePoint twist_invert(const TwistParams& p, PlanePoint z);

PlanePoint translation_apply(const TranslationParams& p, PlanePoint q);
PlanePoint translation_invert(const TranslationParams& p, PlanePoint q);

// Individual branch formulas, evaluated without branch dispatch. Used by the
// seam-continuity checks; production callers go through the *_apply functions.

enum class RadialBranch { Scale, Compress, Identity };
PlanePoint radial_expansion_branch(const RadialExpansionParams& p, PlanePoint z, RadialBranch branch);

enum class TwistBranch { Rotate, Blend, Identity };
/// Rotation angle applied at modulus r by the given branch.
double twist_branch_angle(const TwistParams& p, double r, TwistBranch branch);

enum class StripRow { Upper, Middle, Lower };
enum class StripColumn { Right, Center, Left, Outside };
/// First coordinate of the shear-translation image computed with a fixed row/column formula.
double translation_branch_x(const TranslationParams& p, double x, double y, StripRow row, StripColumn column);

// ---------------------------------------------------------------------------
// Chains
// ---------------------------------------------------------------------------

enum class Direction { Forward, Inverse };

struct PrimitiveMap {
    std::variant<RadialExpansionParams, TwistParams, TranslationParams> kind;
    Direction direction = Direction::Forward;

    PlanePoint apply(PlanePoint z) const;
    PrimitiveMap inverse() const;
};

/// Smallest radius outside of which the primitive is the identity.
double support_radius(const PrimitiveMap& m);

/// Chain of primitives applied left to right. Every point with
/// |z| >= support_radius is left fixed.
struct CompositeMap {
    std::vector<PrimitiveMap> chain;
    double support_radius = 0.0;

    /// Reversed chain with every direction flag flipped.
    CompositeMap inverse() const;
};

PlanePoint composite_apply(const CompositeMap& m, PlanePoint z);

// ---------------------------------------------------------------------------
// Disc swap
// ---------------------------------------------------------------------------

/// Pad width and twist blend width selected for a disc swap.
struct SwapParameters {
    double epsilon = 0.0;
    double eta = 0.0;
};

/// Deterministic halving search for the common pad width; throws InfeasibleParameters
/// when no width is found within the halving budget.
SwapParameters select_swap_parameters(const ClosedDisc& src, const ClosedDisc& dst);

/// Homeomorphism of the closed unit disc carrying `src` onto `dst`, the identity
/// outside D(0; t) where t = result.support_radius, with both discs inside D(0; t).
CompositeMap plan_disc_swap(const ClosedDisc& src, const ClosedDisc& dst);

}  // namespace homeo
