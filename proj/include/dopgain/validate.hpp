#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dopgain {

/// Knobs for the self-validation suite. The PMD working points, reference
/// ratios, and tolerances are fixed; only resolution, sample count, and seed
/// vary.
struct ValidationConfig {
    double sigma_ps = 10.0;
    int grid_points = 2001;
    std::int64_t samples = 1'000'000;
    std::uint64_t seed = 1;
    /// Test hook: name of one check whose measured value is corrupted so the
    /// check fails; empty disables the hook.
    std::string inject_fault;
};

struct CheckResult {
    std::string name;
    bool passed;
    double observed;
    double bound;
    std::string detail;
};

/// Runs every invariant and reference-value check (normalizations, Monte
/// Carlo oracle agreements, likelihood identities, gain-ratio targets) and
/// returns one result per check.
std::vector<CheckResult> run_validation(const ValidationConfig& config);

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace dopgain
