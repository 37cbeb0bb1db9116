#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mogir/analytics.hpp"
#include "mogir/simulation.hpp"
#include "test_util.hpp"

using namespace mogir;

namespace {

std::string sim_violation(const SimConfig& cfg) {
    try {
        validate_sim_config(cfg);
    } catch (const Error& e) {
        return e.name();
    }
    return "";
}

}  // namespace

TEST_CASE("sim config invariants are named on rejection") {
    SimConfig cfg;
    cfg.horizon = 0;
    CHECK(sim_violation(cfg) == "NonPositiveHorizon");
    cfg = SimConfig{};
    cfg.burn_in = -1;
    CHECK(sim_violation(cfg) == "NegativeBurnIn");
    cfg = SimConfig{};
    cfg.burn_in = cfg.horizon;
    CHECK(sim_violation(cfg) == "BurnInExceedsHorizon");
    cfg = SimConfig{};
    cfg.n_paths = 0;
    CHECK(sim_violation(cfg) == "NonPositivePathCount");
    CHECK(sim_violation(SimConfig{}).empty());
}

TEST_CASE("targeting rule pins the deterministic steady state") {
    ModelParams p = testutil::reference_params();
    p.sigma_x = p.sigma_pi = p.sigma_y = 0.0;
    validate_params(p);
    SimConfig cfg;
    cfg.horizon = 100;
    cfg.burn_in = 0;
    cfg.n_paths = 1;

    const auto path = simulate_path(p, inflation_targeting_rule(p), cfg, 0);
    REQUIRE(path.size() == 101);
    for (std::size_t t = 1; t < path.size(); ++t) {
        CHECK(std::fabs(path[t].x) <= 1e-14);
        CHECK(std::fabs(path[t].pi - p.pi_n) <= 1e-12);
        CHECK(std::fabs(path[t].i - (p.r + p.pi_n)) <= 1e-11);
        CHECK(std::fabs((path[t].y - path[t - 1].y) - p.delta) <= 1e-12);
    }
}

TEST_CASE("growth-max settles one step above the target without persistence") {
    ModelParams p = testutil::reference_params();
    p.sigma_x = p.sigma_pi = p.sigma_y = 0.0;
    validate_params(p);
    SimConfig cfg;
    cfg.horizon = 10;
    cfg.burn_in = 0;
    cfg.n_paths = 1;

    const auto path = simulate_path(p, growth_max_rule(p), cfg, 0);
    const double dev = 1.0 / (2.0 * p.gamma * p.lambda);
    const double x_const = 1.0 / (2.0 * p.gamma * p.lambda * p.lambda);
    for (std::size_t t = 1; t < path.size(); ++t)
        CHECK(std::fabs(path[t].pi - (p.pi_n + dev)) <= 1e-12);
    CHECK(std::fabs(path[1].x - x_const) <= 1e-12);
}

TEST_CASE("stabilization decays inflation geometrically without shocks") {
    ModelParams p = testutil::reference_params();
    p.sigma_x = p.sigma_pi = p.sigma_y = 0.0;
    validate_params(p);
    SimConfig cfg;
    cfg.horizon = 40;
    cfg.burn_in = 0;
    cfg.n_paths = 1;
    cfg.initial = EconState::from_gap(0.0, p.pi_n + 0.01, 0.0, p.r + p.pi_n);

    const auto path = simulate_path(p, stabilization_rule(p), cfg, 0);
    const double rho = 1.0 / (1.0 + p.alpha * p.lambda * p.lambda);
    for (std::size_t t = 1; t < path.size(); ++t) {
        const double prev_dev = path[t - 1].pi - p.pi_n;
        const double dev = path[t].pi - p.pi_n;
        CHECK(std::fabs(dev - rho * prev_dev) <= 1e-12);
    }
    // matches iterating the law of motion directly
    const LawOfMotion law = law_of_motion(p, Strategy::PureStabilization);
    double dpi = 0.01;
    for (std::size_t t = 1; t < path.size(); ++t) {
        dpi = law.mean_dpi_next(dpi);
        CHECK(std::fabs((path[t].pi - p.pi_n) - dpi) <= 1e-12);
    }
}

TEST_CASE("paths are bit-identical across repeats and thread counts") {
    const ModelParams p = validate_params(testutil::reference_params());
    SimConfig cfg;
    cfg.horizon = 300;
    cfg.burn_in = 0;
    cfg.n_paths = 7;
    cfg.seed = 4242;
    const PolicyRule rule = stabilization_rule(p);

    const auto base = simulate_paths(p, rule, cfg, 1);
    for (int threads : {1, 2, 3, 5}) {
        const auto again = simulate_paths(p, rule, cfg, threads);
        REQUIRE(again.size() == base.size());
        for (std::size_t k = 0; k < base.size(); ++k) {
            REQUIRE(again[k].size() == base[k].size());
            for (std::size_t t = 0; t < base[k].size(); ++t) {
                CHECK(again[k][t].x == base[k][t].x);
                CHECK(again[k][t].pi == base[k][t].pi);
                CHECK(again[k][t].y_pot == base[k][t].y_pot);
                CHECK(again[k][t].y == base[k][t].y);
                CHECK(again[k][t].i == base[k][t].i);
            }
        }
    }
}

TEST_CASE("output identity holds bit-exactly on noisy paths") {
    const ModelParams p = validate_params(testutil::reference_params());
    SimConfig cfg;
    cfg.horizon = 500;
    cfg.burn_in = 0;
    cfg.n_paths = 3;
    for (const auto& path : simulate_paths(p, growth_max_rule(p), cfg, 2))
        for (const auto& s : path) CHECK(s.y == s.y_pot + s.x);
}

TEST_CASE("moment estimation rejects unusable inputs") {
    CHECK_THROWS_WITH_AS(estimate_moments({}, 0), doctest::Contains("InsufficientData"), Error);

    const ModelParams p = validate_params(testutil::reference_params());
    SimConfig cfg;
    cfg.horizon = 10;
    cfg.burn_in = 0;
    cfg.n_paths = 1;
    const auto paths = simulate_paths(p, inflation_targeting_rule(p), cfg, 1);
    CHECK_THROWS_WITH_AS(estimate_moments(paths, 9), doctest::Contains("InsufficientData"),
                         Error);
    CHECK_NOTHROW(estimate_moments(paths, 8));
}

TEST_CASE("constant paths give zero variance with zero standard error") {
    ModelParams p = testutil::reference_params();
    p.sigma_x = p.sigma_pi = p.sigma_y = 0.0;
    validate_params(p);
    SimConfig cfg;
    cfg.horizon = 50;
    cfg.burn_in = 10;
    cfg.n_paths = 2;
    const auto paths = simulate_paths(p, inflation_targeting_rule(p), cfg, 1);
    const Moments m = estimate_moments(paths, cfg.burn_in);
    CHECK(m.var_pi.value <= 1e-25);
    CHECK(m.var_pi.std_error <= 1e-25);
    CHECK(m.lag1_autocorr_pi.value == 0.0);
    CHECK(m.mean_pi.n_obs == cfg.n_paths * (cfg.horizon - cfg.burn_in));
}

TEST_CASE("observation counts follow the contract") {
    const ModelParams p = validate_params(testutil::reference_params());
    SimConfig cfg;
    cfg.horizon = 120;
    cfg.burn_in = 20;
    cfg.n_paths = 5;
    const auto paths = simulate_paths(p, stabilization_rule(p), cfg, 2);
    const Moments m = estimate_moments(paths, cfg.burn_in);
    CHECK(m.mean_pi.n_obs == 500);
    CHECK(m.var_pi.n_obs == 500);
    CHECK(std::string(m.se_method) == "between-path");
    CHECK(m.mean_pi.std_error >= 0.0);
}

TEST_CASE("single-path estimation falls back to batch means") {
    const ModelParams p = validate_params(testutil::reference_params());
    SimConfig cfg;
    cfg.horizon = 20900;
    cfg.burn_in = 900;
    cfg.n_paths = 1;
    cfg.seed = 31;
    const auto paths = simulate_paths(p, inflation_targeting_rule(p), cfg, 1);
    const Moments m = estimate_moments(paths, cfg.burn_in);
    CHECK(std::string(m.se_method) == "batch-means");
    CHECK(m.mean_pi.std_error > 0.0);
    const LongRunMoments target = longrun_moments(p, Strategy::StrictInflationTargeting);
    CHECK(std::fabs(m.mean_pi.value - target.mean_pi) <= 6.0 * m.mean_pi.std_error);
    CHECK(std::fabs(m.var_pi.value - target.var_pi) <= 6.0 * m.var_pi.std_error);
}

TEST_CASE("ergodic moments agree with the closed forms at modest sample sizes") {
    const ModelParams p = validate_params(testutil::reference_params());
    SimConfig cfg;
    cfg.horizon = 5500;
    cfg.burn_in = 500;
    cfg.n_paths = 20;
    cfg.seed = 8675309;

    for (Strategy s : kAllStrategies) {
        const auto paths = simulate_paths(p, make_rule(p, s), cfg, 2);
        const Moments m = estimate_moments(paths, cfg.burn_in);
        const LongRunMoments target = longrun_moments(p, s);
        const double rho_target = law_of_motion(p, s).pi_lagpi;

        CHECK(std::fabs(m.mean_pi.value - target.mean_pi) <= 4.0 * m.mean_pi.std_error);
        CHECK(std::fabs(m.mean_x.value - target.mean_x) <= 4.0 * m.mean_x.std_error);
        CHECK(std::fabs(m.var_pi.value - target.var_pi) <= 4.0 * m.var_pi.std_error);
        CHECK(std::fabs(m.mean_growth.value - target.mean_growth) <=
              4.0 * m.mean_growth.std_error);
        CHECK(std::fabs(m.lag1_autocorr_pi.value - rho_target) <=
              4.0 * m.lag1_autocorr_pi.std_error);
    }
}

TEST_CASE("one-step growth from a fixed state matches the closed form") {
    const ModelParams p = validate_params(testutil::reference_params());
    const EconState start = EconState::from_gap(0.005, p.pi_n + 0.01, 0.3, 0.0);
    SimConfig cfg;
    cfg.horizon = 1;
    cfg.burn_in = 0;
    cfg.n_paths = 40000;
    cfg.seed = 555;
    cfg.initial = start;

    for (Strategy s : kAllStrategies) {
        const auto paths = simulate_paths(p, make_rule(p, s), cfg, 2);
        double sum = 0.0;
        for (const auto& path : paths) sum += path[1].y - path[0].y;
        const double mean = sum / static_cast<double>(paths.size());
        double ss = 0.0;
        for (const auto& path : paths) {
            const double d = path[1].y - path[0].y - mean;
            ss += d * d;
        }
        const double se =
            std::sqrt(ss / (static_cast<double>(paths.size() - 1) * paths.size()));
        CHECK(std::fabs(mean - expected_growth(p, s, start)) <= 4.0 * se);
    }
}
