#pragma once

#include <string>
#include <vector>

namespace heisenring::cli {

struct CheckResult {
    std::string name;
    std::string description;
    double tolerance = 0.0;
    /// Largest deviation seen; passed iff worst <= tolerance.
    double worst = 0.0;
    bool passed = false;
};

struct VerificationSummary {
    std::vector<CheckResult> checks;

    [[nodiscard]] bool passed() const;
};

/// Runs every oracle-equivalence and invariant suite for N up to 11.
[[nodiscard]] VerificationSummary run_verification();

} // namespace heisenring::cli
