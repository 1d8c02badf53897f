#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homeo/verify.hpp"

namespace homeo {

struct AcceptanceOptions {
    std::uint64_t seed = 0;
    /// Multiplies every tolerance; anything other than 1 is a test hook.
    double tolerance_scale = 1.0;
    /// Adds runtime-budget checks (wall-clock seconds) to each criterion.
    bool timing = false;
};

struct CriterionResult {
    std::string id;
    std::string description;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool passed() const;
};

/// Runs the full acceptance battery at default scale.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// Flattens criterion checks into one report, prefixing each check name with its criterion id.
VerificationReport acceptance_report(const std::vector<CriterionResult>& results, const AcceptanceOptions& options);

// Individual criteria, exposed for the test suite.
CriterionResult check_sup_norm_closed_form(const AcceptanceOptions& options);
CriterionResult check_partial_derivative_bounds(const AcceptanceOptions& options);
CriterionResult check_c1_convergence(const AcceptanceOptions& options);
CriterionResult check_jacobian_fd_oracle(const AcceptanceOptions& options);
CriterionResult check_group_inverse_laws(const AcceptanceOptions& options);
CriterionResult check_disc_swap_end_to_end(const AcceptanceOptions& options);
CriterionResult check_primitive_soundness(const AcceptanceOptions& options);
CriterionResult check_twist_claim_probe(const AcceptanceOptions& options);

/// Seeded valid (src, dst) pair for disc-swap testing: centers uniform in D(0; 0.9) and
/// radii uniform in [0.05, 0.95] of the remaining margin.
std::pair<ClosedDisc, ClosedDisc> random_disc_pair(Rng& rng);

// Seeded valid primitive parameters.
RadialExpansionParams random_radial_params(Rng& rng);
TwistParams random_twist_params(Rng& rng);
TranslationParams random_translation_params(Rng& rng);

}  // namespace homeo
