#include "mogir/model.hpp"

#include <cmath>
#include <string>

namespace mogir {

namespace {

void require(bool ok, const char* name, const std::string& what) {
    if (!ok) throw Error(name, what);
}

}  // namespace

ModelParams validate_params(const ModelParams& p) {
    require(p.beta > 0.0, "NonPositiveBeta", "beta must be > 0, got " + std::to_string(p.beta));
    require(p.phi > 0.0, "NonPositivePhi", "phi must be > 0, got " + std::to_string(p.phi));
    require(p.lambda > 0.0, "NonPositiveLambda",
            "lambda must be > 0, got " + std::to_string(p.lambda));
    require(p.delta > 0.0, "NonPositiveDelta",
            "delta must be > 0, got " + std::to_string(p.delta));
    require(p.gamma > 0.0, "NonPositiveGamma",
            "gamma must be > 0, got " + std::to_string(p.gamma));
    require(p.r > 0.0, "NonPositiveRate", "r must be > 0, got " + std::to_string(p.r));
    require(p.alpha > 0.0, "NonPositiveAlpha",
            "alpha must be > 0, got " + std::to_string(p.alpha));
    require(p.lambda < 1.0, "SlopeOutOfRange",
            "lambda must be < 1, got " + std::to_string(p.lambda));
    require(p.phi < 1.0, "SlopeOutOfRange", "phi must be < 1, got " + std::to_string(p.phi));
    require(p.sigma_x >= 0.0, "NegativeShockStdDev",
            "sigma_x must be >= 0, got " + std::to_string(p.sigma_x));
    require(p.sigma_pi >= 0.0, "NegativeShockStdDev",
            "sigma_pi must be >= 0, got " + std::to_string(p.sigma_pi));
    require(p.sigma_y >= 0.0, "NegativeShockStdDev",
            "sigma_y must be >= 0, got " + std::to_string(p.sigma_y));
    return p;
}

EconState steady_state(const ModelParams& p) {
    return EconState::from_gap(0.0, p.pi_n, 0.0, p.r + p.pi_n);
}

std::pair<double, double> reduced_form_step(const ModelParams& p, const EconState& prev,
                                            const ShockDraw& shocks) {
    const double denom = 1.0 - p.lambda * p.phi;
    const double x_next =
        (p.beta * prev.x - p.phi * (prev.i - prev.pi - p.r)) / denom + shocks.eps_x;
    const double pi_next =
        (prev.pi + p.lambda * (p.beta * prev.x - p.phi * (prev.i - p.r))) / denom +
        p.lambda * shocks.eps_x + shocks.eps_pi;
    return {x_next, pi_next};
}

std::pair<double, double> conditional_means(const ModelParams& p, const EconState& prev,
                                            double i) {
    EconState s = prev;
    s.i = i;
    return reduced_form_step(p, s, ShockDraw{});
}

double structural_fixed_point(const ModelParams& p, const EconState& prev, double i,
                              double tolerance, int max_iterations, int* iterations_out) {
    double m = prev.pi;
    for (int k = 0; k < max_iterations; ++k) {
        const double next = prev.pi + p.lambda * (p.beta * prev.x - p.phi * (i - m - p.r));
        const double delta = std::fabs(next - m);
        m = next;
        if (delta < tolerance) {
            if (iterations_out) *iterations_out = k + 1;
            return m;
        }
    }
    throw Error("NonConvergence", "inflation forecast fixed point did not reach tolerance " +
                                      std::to_string(tolerance) + " within " +
                                      std::to_string(max_iterations) + " iterations");
}

double conditional_infl_variance(const ModelParams& p) {
    return p.lambda * p.lambda * p.sigma_x * p.sigma_x + p.sigma_pi * p.sigma_pi;
}

double conditional_sq_deviation(const ModelParams& p, double expected_pi) {
    const double dev = expected_pi - p.pi_n;
    return dev * dev + conditional_infl_variance(p);
}

double potential_output_step(const ModelParams& p, double y_pot_prev, double expected_sq_dev,
                             double eps_y) {
    if (expected_sq_dev < 0.0) {
        throw Error("NegativeSquaredDeviation",
                    "expected squared inflation deviation must be >= 0, got " +
                        std::to_string(expected_sq_dev));
    }
    return p.delta - p.gamma * expected_sq_dev + y_pot_prev + eps_y;
}

}  // namespace mogir
