#include "mogir/policy.hpp"

#include <algorithm>
#include <cmath>

#include "mogir/golden_section.hpp"

namespace mogir {

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::PureStabilization: return "PureStabilization";
        case Strategy::GrowthMax: return "GrowthMax";
        case Strategy::StrictInflationTargeting: return "StrictInflationTargeting";
    }
    return "?";
}

PolicyRule stabilization_rule(const ModelParams& p) {
    const double c_pi =
        (p.phi + p.alpha * p.lambda) / (p.phi * (1.0 + p.alpha * p.lambda * p.lambda));
    return {p.r + p.pi_n, p.beta / p.phi, c_pi, Strategy::PureStabilization};
}

PolicyRule growth_max_rule(const ModelParams& p) {
    const double lp = p.lambda * p.phi;
    const double offset = (1.0 - lp) / (2.0 * p.gamma * p.lambda * p.lambda * p.phi);
    return {p.r + p.pi_n - offset, p.beta / p.phi, 1.0 / lp, Strategy::GrowthMax};
}

PolicyRule inflation_targeting_rule(const ModelParams& p) {
    return {p.r + p.pi_n, p.beta / p.phi, 1.0 / (p.lambda * p.phi),
            Strategy::StrictInflationTargeting};
}

PolicyRule make_rule(const ModelParams& p, Strategy s) {
    switch (s) {
        case Strategy::PureStabilization: return stabilization_rule(p);
        case Strategy::GrowthMax: return growth_max_rule(p);
        case Strategy::StrictInflationTargeting: return inflation_targeting_rule(p);
    }
    throw Error("UnknownStrategy", "unhandled strategy tag");
}

double apply_rule(const PolicyRule& rule, const EconState& state, double pi_n) {
    return rule.c0 + rule.c_x * state.x + rule.c_pi * (state.pi - pi_n);
}

bool satisfies_taylor_principle(const PolicyRule& rule) { return rule.c_pi > 1.0; }

namespace {

// Objective value at rate i, sign-flipped where the problem is a
// maximization so the search is always a minimization.
double objective_value(const ModelParams& p, Objective obj, const EconState& state, double i) {
    const double epi = structural_fixed_point(p, state, i);
    const double ex = p.beta * state.x - p.phi * (i - epi - p.r);
    const double dpi = epi - p.pi_n;
    switch (obj) {
        case Objective::Loss: return ex * ex + p.alpha * dpi * dpi;
        case Objective::ExpGrowth: return -(-p.gamma * dpi * dpi + ex);
        case Objective::SqInflDev: return dpi * dpi;
    }
    throw Error("UnknownObjective", "unhandled objective tag");
}

// One parabolic-vertex polish. The objectives are exactly quadratic in
// i, so the vertex through three spaced samples recovers the optimum
// well below golden-section resolution.
double parabolic_polish(const std::function<double(double)>& f, double x, double h) {
    const double fl = f(x - h);
    const double fm = f(x);
    const double fr = f(x + h);
    const double denom = fr - 2.0 * fm + fl;
    if (!(denom > 0.0)) return x;
    const double step = 0.5 * h * (fl - fr) / denom;
    if (std::fabs(step) > h) return x;
    return x + step;
}

}  // namespace

double numeric_optimal_rate(const ModelParams& p, Objective objective, const EconState& state) {
    const auto f = [&](double i) { return objective_value(p, objective, state, i); };

    const double c_pi_max =
        std::max(stabilization_rule(p).c_pi, 1.0 / (p.lambda * p.phi));
    const double center = p.r + p.pi_n;
    double half_width =
        10.0 * (1.0 + std::fabs(state.x) + std::fabs(state.pi - p.pi_n)) * c_pi_max;

    for (int attempt = 0; attempt < 2; ++attempt) {
        const GoldenResult res =
            golden_section_minimize(f, center - half_width, center + half_width, 1e-10);
        if (!res.at_boundary) {
            return parabolic_polish(f, res.xmin, 1e-3 * (1.0 + std::fabs(res.xmin)));
        }
        half_width *= 10.0;
    }
    throw Error("BracketFailure", "objective optimum touches the search bracket even after "
                                  "widening; bracket heuristic does not cover these inputs");
}

}  // namespace mogir
