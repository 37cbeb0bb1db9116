#pragma once

#include "mogir/model.hpp"
#include "mogir/policy.hpp"

namespace mogir {

/// Equilibrium law of motion once a rule is substituted into the
/// reduced form:
///   x_t            = x_const  + x_lagpi  * (pi_{t-1} - pi_n) + eps_x
///   pi_t - pi_n    = pi_const + pi_lagpi * (pi_{t-1} - pi_n) + lambda*eps_x + eps_pi
struct LawOfMotion {
    double x_const;
    double x_lagpi;
    double pi_const;
    double pi_lagpi;

    double mean_x_next(double dpi_prev) const { return x_const + x_lagpi * dpi_prev; }
    double mean_dpi_next(double dpi_prev) const { return pi_const + pi_lagpi * dpi_prev; }
};

/// Unconditional (ergodic) moments under a rule.
struct LongRunMoments {
    double mean_pi;
    double mean_x;
    double var_pi;
    double mean_growth;  ///< expected actual-output growth per period
};

LawOfMotion law_of_motion(const ModelParams& p, Strategy strategy);

/// One-step expected actual-output growth at a given lagged state.
double expected_growth(const ModelParams& p, Strategy strategy, const EconState& state);

LongRunMoments longrun_moments(const ModelParams& p, Strategy strategy);

/// Full conditional one-period loss at rate i, including the
/// i-independent variance floor:
/// (E x)^2 + sigma_x^2 + alpha*[(E pi - pi_n)^2 + lambda^2 sigma_x^2 + sigma_pi^2].
double loss_value(const ModelParams& p, const EconState& state, double i);

}  // namespace mogir
