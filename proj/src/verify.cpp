#include "mogir/verify.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <utility>

#include "mogir/analytics.hpp"
#include "mogir/comparison.hpp"

namespace mogir {

namespace {

struct Draw {
    ModelParams params;
    EconState state;
};

// Valid-parameter region sampled well inside the admissible set so the
// search bracket heuristic always covers the optima.
Draw random_draw(std::mt19937_64& gen) {
    auto uni = [&](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    };
    ModelParams p{};
    p.beta = uni(0.2, 1.2);
    p.phi = uni(0.15, 0.85);
    p.lambda = uni(0.1, 0.9);
    p.delta = uni(0.001, 0.01);
    p.gamma = uni(0.5, 8.0);
    p.r = uni(0.005, 0.05);
    p.pi_n = uni(0.0, 0.04);
    p.alpha = uni(0.2, 5.0);
    p.sigma_x = uni(0.0, 0.02);
    p.sigma_pi = uni(0.0, 0.02);
    p.sigma_y = uni(0.0, 0.02);
    const EconState s = EconState::from_gap(uni(-0.05, 0.05), p.pi_n + uni(-0.05, 0.05),
                                            uni(-1.0, 1.0), p.r + p.pi_n + uni(-0.05, 0.05));
    return {validate_params(p), s};
}

VerifyCheck check_fixed_point(std::uint64_t seed) {
    std::mt19937_64 gen(seed ^ 0x66697870746Bull);
    VerifyCheck check{"fixed-point", 0.0, 1e-10, true, ""};
    for (int k = 0; k < 10000; ++k) {
        const Draw d = random_draw(gen);
        const double m_iter = structural_fixed_point(d.params, d.state, d.state.i);
        const double m_closed = conditional_means(d.params, d.state, d.state.i).second;
        const double dev = std::fabs(m_iter - m_closed);
        if (dev > check.max_deviation) {
            check.max_deviation = dev;
            check.worst_case = "draw " + std::to_string(k);
        }
    }
    check.pass = check.max_deviation <= check.tolerance;
    return check;
}

VerifyCheck check_foc(std::uint64_t seed, double gamma_bump) {
    std::mt19937_64 gen(seed ^ 0x666F63ull);
    VerifyCheck check{"foc", 0.0, 1e-7, true, ""};
    const std::pair<Objective, Strategy> pairs[] = {
        {Objective::Loss, Strategy::PureStabilization},
        {Objective::ExpGrowth, Strategy::GrowthMax},
        {Objective::SqInflDev, Strategy::StrictInflationTargeting},
    };
    for (int k = 0; k < 1000; ++k) {
        const Draw d = random_draw(gen);
        ModelParams closed_params = d.params;
        closed_params.gamma += gamma_bump;
        for (const auto& [objective, strategy] : pairs) {
            const double i_numeric = numeric_optimal_rate(d.params, objective, d.state);
            const double i_closed =
                apply_rule(make_rule(closed_params, strategy), d.state, d.params.pi_n);
            const double dev = std::fabs(i_numeric - i_closed);
            if (dev > check.max_deviation) {
                check.max_deviation = dev;
                check.worst_case =
                    std::string(strategy_name(strategy)) + " at draw " + std::to_string(k);
            }
        }
    }
    check.pass = check.max_deviation <= check.tolerance;
    return check;
}

double se_units(double sim, double analytic, double std_error) {
    const double diff = std::fabs(sim - analytic);
    if (std_error > 0.0) return diff / std_error;
    return diff <= 1e-12 ? 0.0 : std::numeric_limits<double>::infinity();
}

VerifyCheck check_moments(const RunConfig& cfg, int n_threads) {
    VerifyCheck check{"moments", 0.0, 4.0, true, ""};
    for (Strategy s : kAllStrategies) {
        const PolicyRule rule = make_rule(cfg.params, s);
        const auto paths = simulate_paths(cfg.params, rule, cfg.sim, n_threads);
        const Moments moments = estimate_moments(paths, cfg.sim.burn_in);
        const LongRunMoments target = longrun_moments(cfg.params, s);
        const double target_rho = law_of_motion(cfg.params, s).pi_lagpi;

        const std::pair<const char*, double> cells[] = {
            {"mean_pi", se_units(moments.mean_pi.value, target.mean_pi, moments.mean_pi.std_error)},
            {"mean_x", se_units(moments.mean_x.value, target.mean_x, moments.mean_x.std_error)},
            {"var_pi", se_units(moments.var_pi.value, target.var_pi, moments.var_pi.std_error)},
            {"mean_growth",
             se_units(moments.mean_growth.value, target.mean_growth, moments.mean_growth.std_error)},
            {"lag1_autocorr_pi", se_units(moments.lag1_autocorr_pi.value, target_rho,
                                          moments.lag1_autocorr_pi.std_error)},
        };
        for (const auto& [cell, z] : cells) {
            if (z > check.max_deviation) {
                check.max_deviation = z;
                check.worst_case = std::string(strategy_name(s)) + " " + cell;
            }
        }
    }
    check.pass = check.max_deviation <= check.tolerance;
    return check;
}

}  // namespace

std::vector<VerifyCheck> run_verification(const RunConfig& cfg, const VerifyOptions& opt) {
    const auto wanted = [&](const char* name) {
        return opt.checks.empty() || opt.checks.count(name) > 0;
    };
    std::vector<VerifyCheck> checks;
    if (wanted("fixed-point")) checks.push_back(check_fixed_point(cfg.sim.seed));
    if (wanted("foc")) checks.push_back(check_foc(cfg.sim.seed, opt.closed_form_gamma_bump));
    if (wanted("moments")) checks.push_back(check_moments(cfg, opt.n_threads));
    if (checks.empty())
        throw Error("ConfigError", "no known checks selected; valid: fixed-point, foc, moments");
    return checks;
}

}  // namespace mogir
