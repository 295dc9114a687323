#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctrx/params.hpp"

namespace ctrx {

// One invariant check. max_residual is a violation measure: for magnitude
// checks it is the worst sampled residual against `tolerance`; for ordering
// checks (strict bounds, non-vanishing torsion) it is the worst margin
// violation and the tolerance is 0.
struct CheckResult {
    std::string check;
    long long samples{};
    double max_residual{};
    double tolerance{};
    bool pass{};
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool pass{};
};

// Runs the full invariant suite for one parameter choice (plus the swept
// surface of its regime). Deterministic for a fixed seed.
VerifyReport run_verification(const TractrixParams& p, int samples = 1000,
                              std::uint64_t seed = 20240801);

}  // namespace ctrx
