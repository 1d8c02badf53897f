#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "homeo/ball_maps.hpp"
#include "homeo/disc_homeo.hpp"
#include "homeo/plane.hpp"
#include "homeo/sampling.hpp"

namespace homeo {

inline constexpr const char* kArtifactVersion = "0.1.0";

// Tolerance budgets shared by the CLI battery and the acceptance suite.
inline constexpr double kExactTol = 1e-12;      // algebraic identities, single primitives
inline constexpr double kCompositeTol = 1e-9;   // long chains
inline constexpr double kFdTol = 1e-6;          // finite differences
inline constexpr double kHausdorffTol = 1e-6;   // dense boundary sampling
inline constexpr std::size_t kHausdorffSamples = 4096;
inline constexpr std::size_t kIdentitySamples = 1024;
inline constexpr double kFdStep = 1e-5;

// ---------------------------------------------------------------------------
// Report data model
// ---------------------------------------------------------------------------

enum class Relation {
    LessEqual,  ///< measured <= target + tolerance
    Equal,      ///< |measured - target| <= tolerance
    Less,       ///< measured < target + tolerance
};

const char* to_string(Relation r);

bool relation_holds(double measured, double target, double tolerance, Relation relation);

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double target = 0.0;
    double tolerance = 0.0;
    Relation relation = Relation::LessEqual;
    bool passed = false;
    /// Informational checks are reported but never fail a suite.
    bool informational = false;

    static CheckResult make(std::string name, double measured, double target, double tolerance,
                            Relation relation, bool informational = false);
};

struct VerificationReport {
    std::string artifact_version = kArtifactVersion;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    double wall_time = 0.0;

    /// True iff every non-informational check passed.
    bool all_passed() const;
    std::vector<std::string> failed_names() const;
};

// ---------------------------------------------------------------------------
// Estimators and geometric checks
// ---------------------------------------------------------------------------

using DeviationFn = std::function<double(std::span<const double>)>;
using PlaneMap = std::function<PlanePoint(PlanePoint)>;
using VectorMap = std::function<void(std::span<const double>, std::span<double>)>;

/// Max of `deviation` over the samples of `spec`: a lower bound on the true sup. On a
/// RadialGrid region the grid argmax is refined by a 1-D bracketed search.
double sup_norm_estimate(const DeviationFn& deviation, const SampleSpec& spec);

/// max |inverse(forward(z)) - z| over the (two-dimensional) samples of `spec`.
double roundtrip_max_error(const PlaneMap& forward, const PlaneMap& inverse, const SampleSpec& spec);

/// Symmetric Hausdorff distance between the closed polyline through h applied to n evenly
/// spaced points of the boundary of `src` and the closed polyline through n evenly spaced
/// points of the boundary of `dst`. Requires n >= 8.
double hausdorff_boundary_check(const CompositeMap& h, const ClosedDisc& src, const ClosedDisc& dst,
                                std::size_t n);

/// max |h(z) - z| over the samples of `spec`.
double boundary_identity_check(const CompositeMap& h, const SampleSpec& spec);

/// Central-difference Jacobian. Throws DomainError unless |x| <= 1 - 2 step.
JacobianMatrix fd_jacobian(const VectorMap& map, const BallPoint& x, double step);

/// Measures sup |sigma_{a;b;eps}(z) - sigma_{a;b;delta}(z)| and records whether it is below
/// eps - delta. The result is informational. Requires 0 < delta < eps < 1 - b.
CheckResult sigma_claim_probe(double a, double b, double eps, double delta, const SampleSpec& spec);

/// C1 breakdown of f^(t) for every t (each t >= 1). `spec` must be BallUniform{q}; its seed
/// and count define the random part of the derivative sample set.
std::vector<C1Breakdown> convergence_sweep(int q, std::span<const double> t_values, const SampleSpec& spec);

/// The full battery for one planned swap: containment both ways, boundary Hausdorff,
/// identity outside the support, roundtrip, and both discs inside the support.
std::vector<CheckResult> disc_swap_checks(const ClosedDisc& src, const ClosedDisc& dst, const CompositeMap& h,
                                          std::uint64_t seed, std::size_t samples, double tolerance_scale = 1.0);

}  // namespace homeo
