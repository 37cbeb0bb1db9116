#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mogir/analytics.hpp"
#include "mogir/policy.hpp"
#include "test_util.hpp"

using namespace mogir;

TEST_CASE("closed-form rule coefficients at the reference calibration") {
    const ModelParams p = validate_params(testutil::reference_params());

    const PolicyRule stab = stabilization_rule(p);
    CHECK(std::fabs(stab.c0 - 0.04) <= 1e-15);
    CHECK(std::fabs(stab.c_x - 1.6) <= 1e-15);
    CHECK(std::fabs(stab.c_pi - 1.4678899082568808) <= 1e-15);  // 0.8/0.545
    CHECK(stab.strategy == Strategy::PureStabilization);

    const PolicyRule gm = growth_max_rule(p);
    CHECK(std::fabs(gm.c_x - 1.6) <= 1e-15);
    CHECK(std::fabs(gm.c_pi - 6.666666666666667) <= 1e-14);      // 1/0.15
    CHECK(std::fabs(gm.c0 - (-4.6822222222222223)) <= 1e-14);    // 0.04 - 0.85/0.18
    CHECK(gm.strategy == Strategy::GrowthMax);

    const PolicyRule it = inflation_targeting_rule(p);
    CHECK(std::fabs(it.c0 - 0.04) <= 1e-15);
    CHECK(it.c_x == gm.c_x);
    CHECK(it.c_pi == gm.c_pi);
    CHECK(it.strategy == Strategy::StrictInflationTargeting);
}

TEST_CASE("c_x is beta/phi for every strategy") {
    std::mt19937_64 gen(201);
    for (int k = 0; k < 300; ++k) {
        const ModelParams p = testutil::random_params(gen);
        for (Strategy s : kAllStrategies)
            CHECK(make_rule(p, s).c_x == p.beta / p.phi);
    }
}

TEST_CASE("apply_rule evaluates the affine form") {
    const ModelParams p = validate_params(testutil::reference_params());
    const PolicyRule stab = stabilization_rule(p);

    CHECK(apply_rule(stab, steady_state(p), p.pi_n) == stab.c0);

    const EconState s = EconState::from_gap(0.01, p.pi_n + 0.01, 0.0, 0.0);
    // 0.04 + 1.6*0.01 + 1.4678899082568808*0.01
    CHECK(std::fabs(apply_rule(stab, s, p.pi_n) - 0.070678899082568802) <= 1e-15);

    // doubling the inflation deviation doubles that term exactly
    const EconState d1 = EconState::from_gap(0.0, p.pi_n + 0.013, 0.0, 0.0);
    const EconState d2 = EconState::from_gap(0.0, p.pi_n + 0.026, 0.0, 0.0);
    const double t1 = apply_rule(stab, d1, p.pi_n) - stab.c0;
    const double t2 = apply_rule(stab, d2, p.pi_n) - stab.c0;
    CHECK(std::fabs(t2 - 2.0 * t1) <= 1e-15);
}

TEST_CASE("Taylor principle holds for all three rules") {
    CHECK_FALSE(satisfies_taylor_principle(PolicyRule{0.0, 0.0, 1.0, Strategy::GrowthMax}));
    CHECK(satisfies_taylor_principle(PolicyRule{0.0, 0.0, 1.4678899082568808,
                                                Strategy::PureStabilization}));
    CHECK(satisfies_taylor_principle(PolicyRule{0.0, 0.0, 6.666666666666667,
                                                Strategy::GrowthMax}));

    std::mt19937_64 gen(202);
    for (int k = 0; k < 1000; ++k) {
        const ModelParams p = testutil::random_params(gen);
        for (Strategy s : kAllStrategies) {
            const PolicyRule rule = make_rule(p, s);
            CHECK(rule.c_pi > 1.0);
            CHECK(satisfies_taylor_principle(rule));
        }
    }
}

TEST_CASE("targeting and growth-max rules differ only in the constant") {
    std::mt19937_64 gen(203);
    for (int k = 0; k < 500; ++k) {
        const ModelParams p = testutil::random_params(gen);
        const PolicyRule gm = growth_max_rule(p);
        const PolicyRule it = inflation_targeting_rule(p);
        CHECK(it.c_x == gm.c_x);
        CHECK(it.c_pi == gm.c_pi);
        const double offset =
            (1.0 - p.lambda * p.phi) / (2.0 * p.gamma * p.lambda * p.lambda * p.phi);
        CHECK(offset > 0.0);
        CHECK(std::fabs((it.c0 - gm.c0) - offset) <= 1e-12);
    }
}

TEST_CASE("first-order conditions hold under each rule") {
    std::mt19937_64 gen(204);
    for (int k = 0; k < 300; ++k) {
        const ModelParams p = testutil::random_params(gen);
        const EconState s = testutil::random_state(gen, p);

        {
            const double i = apply_rule(stabilization_rule(p), s, p.pi_n);
            const auto [ex, epi] = conditional_means(p, s, i);
            CHECK(std::fabs(ex + p.alpha * p.lambda * (epi - p.pi_n)) <= 1e-10);
        }
        {
            const double i = apply_rule(growth_max_rule(p), s, p.pi_n);
            const double epi = conditional_means(p, s, i).second;
            CHECK(std::fabs(epi - p.pi_n - 1.0 / (2.0 * p.gamma * p.lambda)) <= 1e-10);
        }
        {
            const double i = apply_rule(inflation_targeting_rule(p), s, p.pi_n);
            const double epi = conditional_means(p, s, i).second;
            CHECK(std::fabs(epi - p.pi_n) <= 1e-10);
        }
    }
}

TEST_CASE("numeric search reproduces each closed-form rule") {
    std::mt19937_64 gen(205);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const ModelParams p = testutil::random_params(gen);
        const EconState s = testutil::random_state(gen, p);
        const std::pair<Objective, PolicyRule> cases[] = {
            {Objective::Loss, stabilization_rule(p)},
            {Objective::ExpGrowth, growth_max_rule(p)},
            {Objective::SqInflDev, inflation_targeting_rule(p)},
        };
        for (const auto& [objective, rule] : cases) {
            const double diff =
                std::fabs(numeric_optimal_rate(p, objective, s) - apply_rule(rule, s, p.pi_n));
            worst = std::max(worst, diff);
        }
    }
    CHECK(worst <= 1e-7);
}

TEST_CASE("numeric search reproduces the worked stabilization example") {
    const ModelParams p = validate_params(testutil::reference_params());
    const EconState s = EconState::from_gap(0.01, p.pi_n + 0.01, 0.0, 0.0);
    CHECK(std::fabs(numeric_optimal_rate(p, Objective::Loss, s) -
                    apply_rule(stabilization_rule(p), s, p.pi_n)) <= 1e-7);
    CHECK(std::fabs(numeric_optimal_rate(p, Objective::SqInflDev, s) -
                    apply_rule(inflation_targeting_rule(p), s, p.pi_n)) <= 1e-7);
    CHECK(std::fabs(numeric_optimal_rate(p, Objective::ExpGrowth, s) -
                    apply_rule(growth_max_rule(p), s, p.pi_n)) <= 1e-7);
}

TEST_CASE("bracket failure surfaces when the optimum is unreachable") {
    // Tiny gamma pushes the growth-max intercept far beyond any
    // reasonable bracket around r + pi_n.
    ModelParams p = testutil::reference_params();
    p.gamma = 1e-4;
    p.lambda = 0.1;
    p.phi = 0.1;
    validate_params(p);
    CHECK_THROWS_WITH_AS(numeric_optimal_rate(p, Objective::ExpGrowth, steady_state(p)),
                         doctest::Contains("BracketFailure"), Error);
}
