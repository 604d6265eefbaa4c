#pragma once

// Identity suite run by the `verify` command: every structural identity the
// library promises, evaluated on one measure with pinned tolerances.

#include <string>
#include <vector>

#include "mopuc/measures.hpp"

namespace mopuc {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    bool skipped = false;
    std::string note;
    double seconds = 0.0;
};

struct VerifySummary {
    std::vector<CheckResult> checks;
    bool all_passed = false;
};

/// Run the full suite on a circle measure. `order` caps the moment order that
/// is examined; checks that need more structure than the measure offers are
/// reported as skipped, never silently dropped. `jobs` > 1 evaluates the
/// independent checks concurrently.
VerifySummary verify_measure(const CircleMeasure& mu, int order, int jobs = 1,
                             const Tolerances& tol = {});

}  // namespace mopuc
