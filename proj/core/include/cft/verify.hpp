#pragma once

// The acceptance criteria as callable checks, shared by `cft verify` and the
// acceptance test binary.

#include "cft/arith.hpp"
#include "cft/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cft {

enum class Profile { Quick, Full };

Profile parse_profile(const std::string& text);
std::string to_string(Profile profile);

struct VerifyOptions {
    Profile profile = Profile::Full;
    u64 seed = 0x5eedc0ffee;
    unsigned workers = 1;
    /// Certifying polynomial for p = x^2 + 14y^2; replaceable for negative controls.
    IntPolynomial g_d56 = make_polynomial({-7, 0, 2, 0, 1});
    /// Overrides the criterion's primary bound (reciprocity limit, sieve X, ...).
    std::optional<u64> limit;
};

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    /// Wall time; kept out of `detail` so reports stay reproducible.
    double elapsed_ms = 0;
    /// Time budget from the criterion statement (full profile), if any.
    std::optional<double> time_limit_ms;
};

/// Criterion names in order: reciprocity, x4plus1, x2plus14y2, rayclass,
/// hilbert, padic, herbrand, chebotarev, ideals, decomposition.
const std::vector<std::string>& criterion_names();
/// Accepts a name or its 1-based number; throws DomainError otherwise.
int criterion_id(const std::string& name_or_number);

CheckResult run_criterion(int id, const VerifyOptions& options);
std::vector<CheckResult> verify_all(const VerifyOptions& options);

}  // namespace cft
