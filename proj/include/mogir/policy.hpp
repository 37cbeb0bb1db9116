#pragma once

#include <string>

#include "mogir/model.hpp"

namespace mogir {

enum class Strategy { PureStabilization, GrowthMax, StrictInflationTargeting };

constexpr Strategy kAllStrategies[] = {Strategy::PureStabilization, Strategy::GrowthMax,
                                       Strategy::StrictInflationTargeting};

const char* strategy_name(Strategy s);

/// Affine reaction function i = c0 + c_x*x + c_pi*(pi - pi_n).
struct PolicyRule {
    double c0;
    double c_x;
    double c_pi;
    Strategy strategy;
};

/// Rule minimizing the stabilization loss:
/// c0 = r + pi_n, c_x = beta/phi, c_pi = (phi + alpha*lambda)/(phi*(1 + alpha*lambda^2)).
PolicyRule stabilization_rule(const ModelParams& p);

/// Rule maximizing expected actual-output growth:
/// c0 = r + pi_n - (1 - lambda*phi)/(2*gamma*lambda^2*phi), c_pi = 1/(lambda*phi).
PolicyRule growth_max_rule(const ModelParams& p);

/// Strict inflation targeting rule: sets the rate so the one-step
/// inflation forecast equals pi_n exactly.
PolicyRule inflation_targeting_rule(const ModelParams& p);

PolicyRule make_rule(const ModelParams& p, Strategy s);

double apply_rule(const PolicyRule& rule, const EconState& state, double pi_n);

/// True iff the long-run nominal-rate response to inflation exceeds
/// one-for-one (c_pi > 1).
bool satisfies_taylor_principle(const PolicyRule& rule);

/// One-period conditional objectives searched over the policy rate i.
/// Variance terms that do not depend on i are omitted.
enum class Objective {
    Loss,        ///< (E x)^2 + alpha*(E pi - pi_n)^2, minimized
    ExpGrowth,   ///< -gamma*(E pi - pi_n)^2 + E x, maximized
    SqInflDev,   ///< (E pi - pi_n)^2, minimized
};

/// Numerically re-derives the optimal rate: golden-section search of the
/// chosen objective over a bracket around r + pi_n, conditional means
/// evaluated through the structural fixed point so this path shares no
/// code with the closed-form rules it is used to check. Throws
/// Error("BracketFailure") if the optimum still touches the bracket
/// after widening once.
double numeric_optimal_rate(const ModelParams& p, Objective objective, const EconState& state);

}  // namespace mogir
