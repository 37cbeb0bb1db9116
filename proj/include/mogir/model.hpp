#pragma once

#include <utility>

#include "mogir/errors.hpp"

namespace mogir {

/// Structural parameters of the backward-looking model plus shock
/// standard deviations. Rates are decimals per period, output
/// variables are log levels.
struct ModelParams {
    double beta;      ///< persistence of the output gap
    double phi;       ///< real-rate sensitivity of the output gap
    double lambda;    ///< inflation sensitivity to the output gap
    double delta;     ///< maximum potential growth per period
    double gamma;     ///< growth penalty on squared inflation deviation
    double r;         ///< natural real interest rate
    double pi_n;      ///< MOGIR: growth-maximizing inflation rate
    double alpha;     ///< weight on inflation stabilization in the loss
    double sigma_x;   ///< std dev of the demand shock
    double sigma_pi;  ///< std dev of the inflation shock
    double sigma_y;   ///< std dev of the potential-output shock
};

/// One period's realized state. y == y_pot + x always.
struct EconState {
    double x = 0.0;      ///< output gap (log deviation)
    double pi = 0.0;     ///< inflation rate
    double y_pot = 0.0;  ///< log potential output
    double y = 0.0;      ///< log actual output
    double i = 0.0;      ///< policy rate set this period for the next

    static EconState from_gap(double x, double pi, double y_pot, double i) {
        return {x, pi, y_pot, y_pot + x, i};
    }
};

struct ShockDraw {
    double eps_x = 0.0;
    double eps_pi = 0.0;
    double eps_y = 0.0;
};

/// Checks every parameter restriction; throws Error naming the first
/// violated invariant, returns the params unchanged otherwise.
ModelParams validate_params(const ModelParams& p);

/// Deterministic steady state: x=0, pi=pi_n, y_pot=0, i=r+pi_n.
EconState steady_state(const ModelParams& p);

/// One reduced-form step: next (x, pi) given the previous state, the
/// rate prev.i set last period, and this period's shocks.
std::pair<double, double> reduced_form_step(const ModelParams& p,
                                            const EconState& prev,
                                            const ShockDraw& shocks);

/// Conditional means of (x, pi) one period ahead given the rate i,
/// from the closed-form reduced form with zero shocks.
std::pair<double, double> conditional_means(const ModelParams& p,
                                            const EconState& prev, double i);

/// Rational-expectations inflation forecast solved by fixed-point
/// iteration of m -> prev.pi + lambda*[beta*prev.x - phi*(i - m - r)].
/// The map is a contraction with modulus lambda*phi < 1. Throws
/// Error("NonConvergence") if the cap is hit, which cannot happen for
/// validated params and signals a corrupted input.
double structural_fixed_point(const ModelParams& p, const EconState& prev,
                              double i, double tolerance = 1e-12,
                              int max_iterations = 10000,
                              int* iterations_out = nullptr);

/// Conditional variance of next-period inflation, lambda^2*sigma_x^2 + sigma_pi^2.
double conditional_infl_variance(const ModelParams& p);

/// E_{t-1}(pi_t - pi_n)^2 given the conditional mean forecast:
/// squared forecast deviation plus the i-independent conditional variance.
double conditional_sq_deviation(const ModelParams& p, double expected_pi);

/// Potential output recursion: y_pot_next = delta - gamma*expected_sq_dev
/// + y_pot_prev + eps_y. Rejects negative expected_sq_dev.
double potential_output_step(const ModelParams& p, double y_pot_prev,
                             double expected_sq_dev, double eps_y);

}  // namespace mogir
