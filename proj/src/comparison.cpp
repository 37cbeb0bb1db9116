#include "mogir/comparison.hpp"

#include <algorithm>
#include <cmath>

namespace mogir {

namespace {

constexpr std::int64_t kOneStepPaths = 50000;

// Mean one-period growth over many single-period paths restarted from
// the reference state; plain iid standard error.
MomentEstimate one_step_growth_estimate(const ModelParams& p, const PolicyRule& rule,
                                        const SimConfig& base, const EconState& reference,
                                        int n_threads) {
    SimConfig cfg = base;
    cfg.horizon = 1;
    cfg.burn_in = 0;
    cfg.n_paths = kOneStepPaths;
    cfg.initial = reference;
    const auto paths = simulate_paths(p, rule, cfg, n_threads);

    const double n = static_cast<double>(paths.size());
    double sum = 0.0;
    for (const auto& path : paths) sum += path[1].y - path[0].y;
    const double mean = sum / n;
    double ss = 0.0;
    for (const auto& path : paths) {
        const double d = path[1].y - path[0].y - mean;
        ss += d * d;
    }
    const double se = n > 1.0 ? std::sqrt(ss / ((n - 1.0) * n)) : 0.0;
    return {mean, se, static_cast<std::int64_t>(paths.size())};
}

void flag_if_off(StrategyReport& rep, const char* cell, double analytic,
                 const MomentEstimate& sim) {
    const double tol = std::max(4.0 * sim.std_error, 1e-12);
    if (std::fabs(sim.value - analytic) > tol)
        rep.discrepancies.push_back(std::string("DISCREPANCY ") + cell);
}

}  // namespace

ComparisonReport compare_strategies(const ModelParams& p, const SimConfig& cfg,
                                    const EconState& reference_state, int n_threads) {
    validate_params(p);
    validate_sim_config(cfg);

    ComparisonReport report;
    report.gap_closed_form = 1.0 / (4.0 * p.gamma * p.lambda * p.lambda);
    report.time_inconsistency_gap =
        expected_growth(p, Strategy::GrowthMax, reference_state) -
        expected_growth(p, Strategy::StrictInflationTargeting, reference_state);

    for (std::size_t k = 0; k < 3; ++k) {
        const Strategy s = kAllStrategies[k];
        StrategyReport& rep = report.per_strategy[k];
        rep.strategy = s;
        rep.rule = make_rule(p, s);
        rep.law = law_of_motion(p, s);
        rep.analytic = longrun_moments(p, s);

        const auto paths = simulate_paths(p, rep.rule, cfg, n_threads);
        rep.simulated = estimate_moments(paths, cfg.burn_in);

        rep.one_step_growth_analytic = expected_growth(p, s, reference_state);
        rep.one_step_growth_sim =
            one_step_growth_estimate(p, rep.rule, cfg, reference_state, n_threads);

        flag_if_off(rep, "mean_pi", rep.analytic.mean_pi, rep.simulated.mean_pi);
        flag_if_off(rep, "mean_x", rep.analytic.mean_x, rep.simulated.mean_x);
        flag_if_off(rep, "var_pi", rep.analytic.var_pi, rep.simulated.var_pi);
        flag_if_off(rep, "mean_growth", rep.analytic.mean_growth, rep.simulated.mean_growth);
        flag_if_off(rep, "one_step_growth", rep.one_step_growth_analytic,
                    rep.one_step_growth_sim);
        if (!rep.discrepancies.empty()) report.any_discrepancy = true;
    }

    report.ranking = {Strategy::PureStabilization, Strategy::GrowthMax,
                      Strategy::StrictInflationTargeting};
    std::stable_sort(report.ranking.begin(), report.ranking.end(),
                     [&](Strategy a, Strategy b) {
                         return longrun_moments(p, a).mean_growth >
                                longrun_moments(p, b).mean_growth;
                     });
    return report;
}

TimeInconsistencyGaps demonstrate_time_inconsistency(const ModelParams& p,
                                                     const EconState& reference_state) {
    validate_params(p);
    TimeInconsistencyGaps gaps{};
    gaps.one_step_gap = expected_growth(p, Strategy::GrowthMax, reference_state) -
                        expected_growth(p, Strategy::StrictInflationTargeting, reference_state);
    gaps.long_run_gap =
        longrun_moments(p, Strategy::StrictInflationTargeting).mean_growth -
        longrun_moments(p, Strategy::GrowthMax).mean_growth;
    gaps.closed_form = 1.0 / (4.0 * p.gamma * p.lambda * p.lambda);
    return gaps;
}

}  // namespace mogir
