#pragma once

#include <span>
#include <string>

#include "homeo/ball_maps.hpp"
#include "homeo/verify.hpp"

namespace homeo {

/// "%.17g"; non-finite values render as "null" in JSON and "nan"/"inf"/"-inf" in CSV.
std::string format_number(double v);

/// JSON object with keys artifact_version, seed, checks, wall_time. Each check carries
/// name, measured, target, tolerance, relation, passed, informational. Output depends only
/// on the report contents.
std::string to_json(const VerificationReport& report);

/// Header `t,c1_distance,sup_f_minus_id,max_diag_dev,max_offdiag`, one row per entry.
std::string sweep_csv(std::span<const C1Breakdown> rows);

/// Plain-text summary, one line per check.
std::string to_text(const VerificationReport& report);

}  // namespace homeo
