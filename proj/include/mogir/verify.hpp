#pragma once

#include <set>
#include <string>
#include <vector>

#include "mogir/config.hpp"

namespace mogir {

struct VerifyCheck {
    std::string name;        ///< "foc", "fixed-point" or "moments"
    double max_deviation;    ///< absolute deviation, or standard-error units for "moments"
    double tolerance;
    bool pass;
    std::string worst_case;  ///< where the max deviation occurred
};

struct VerifyOptions {
    std::set<std::string> checks;  ///< empty = run all
    /// Testing aid: shifts gamma in the closed-form rule construction
    /// only, so the independent numeric path exposes the mismatch.
    double closed_form_gamma_bump = 0.0;
    int n_threads = 0;
};

/// Oracle cross-checks: numeric FOC search vs closed-form rules,
/// fixed-point iteration vs the reduced-form conditional mean, and
/// Monte Carlo moments vs the closed-form long-run moments. Draws are
/// seeded from cfg.sim.seed, so results are deterministic per config.
std::vector<VerifyCheck> run_verification(const RunConfig& cfg, const VerifyOptions& opt);

}  // namespace mogir
