#pragma once

#include <array>
#include <string>
#include <vector>

#include "mogir/analytics.hpp"
#include "mogir/simulation.hpp"

namespace mogir {

/// Everything the report carries for one strategy: the rule, its
/// equilibrium dynamics, analytic long-run moments, the Monte Carlo
/// estimates of the same moments, and one-step expected growth at the
/// reference state (closed form and simulated).
struct StrategyReport {
    Strategy strategy{};
    PolicyRule rule{};
    LawOfMotion law{};
    LongRunMoments analytic{};
    Moments simulated{};
    double one_step_growth_analytic = 0.0;
    MomentEstimate one_step_growth_sim{};
    std::vector<std::string> discrepancies;  ///< cells where |sim - analytic| > 4 SE
};

struct ComparisonReport {
    std::array<StrategyReport, 3> per_strategy{};
    std::array<Strategy, 3> ranking{};  ///< by analytic long-run mean_growth, best first
    double time_inconsistency_gap = 0.0;  ///< expected_growth(GrowthMax) - expected_growth(IT)
    double gap_closed_form = 0.0;         ///< 1/(4*gamma*lambda^2)
    bool any_discrepancy = false;
};

struct TimeInconsistencyGaps {
    double one_step_gap;   ///< per-period temptation: GrowthMax minus IT expected growth
    double long_run_gap;   ///< long-run cost: IT minus GrowthMax mean growth
    double closed_form;    ///< 1/(4*gamma*lambda^2); both gaps equal it
};

/// Runs analytics and simulation for all three strategies and collects
/// the comparison tables. Simulated cells further than 4 standard
/// errors from their closed form get a DISCREPANCY flag rather than a
/// hard failure.
ComparisonReport compare_strategies(const ModelParams& p, const SimConfig& cfg,
                                    const EconState& reference_state, int n_threads = 0);

/// The per-period temptation to abandon strict inflation targeting and
/// the long-run growth shortfall of giving in; the two coincide.
TimeInconsistencyGaps demonstrate_time_inconsistency(const ModelParams& p,
                                                     const EconState& reference_state);

}  // namespace mogir
