#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace snc::charts {

struct IdentityOptions {
    int samples = 100;
    std::optional<double> tolerance; // overrides every per-identity default
    std::uint64_t seed = 20260823ULL;
};

struct IdentityResult {
    std::string name;
    int samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = true;
};

/// Evaluate every chart identity at `samples` seeded random points and report
/// the worst residual per identity against its default (or overridden)
/// tolerance.  samples == 0 yields a vacuous pass on every identity.
std::vector<IdentityResult> run_identity_suite(const IdentityOptions& options);

} // namespace snc::charts
