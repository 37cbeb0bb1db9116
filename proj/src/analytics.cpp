#include "mogir/analytics.hpp"

namespace mogir {

LawOfMotion law_of_motion(const ModelParams& p, Strategy strategy) {
    const double al2 = 1.0 + p.alpha * p.lambda * p.lambda;
    switch (strategy) {
        case Strategy::PureStabilization:
            // pi_lagpi = 1 - alpha*lambda^2/(1+alpha*lambda^2) = 1/(1+alpha*lambda^2)
            return {0.0, -p.alpha * p.lambda / al2, 0.0, 1.0 / al2};
        case Strategy::GrowthMax:
            return {1.0 / (2.0 * p.gamma * p.lambda * p.lambda), -1.0 / p.lambda,
                    1.0 / (2.0 * p.gamma * p.lambda), 0.0};
        case Strategy::StrictInflationTargeting:
            return {0.0, -1.0 / p.lambda, 0.0, 0.0};
    }
    throw Error("UnknownStrategy", "unhandled strategy tag");
}

double expected_growth(const ModelParams& p, Strategy strategy, const EconState& state) {
    const double dpi = state.pi - p.pi_n;
    const double cv = conditional_infl_variance(p);
    switch (strategy) {
        case Strategy::PureStabilization: {
            const double al2 = 1.0 + p.alpha * p.lambda * p.lambda;
            const double fdev = dpi / al2;
            return p.delta - p.gamma * (fdev * fdev + cv) - p.alpha * p.lambda * fdev - state.x;
        }
        case Strategy::GrowthMax:
            return p.delta - p.gamma * cv + 1.0 / (4.0 * p.gamma * p.lambda * p.lambda) -
                   dpi / p.lambda - state.x;
        case Strategy::StrictInflationTargeting:
            return p.delta - p.gamma * cv - dpi / p.lambda - state.x;
    }
    throw Error("UnknownStrategy", "unhandled strategy tag");
}

LongRunMoments longrun_moments(const ModelParams& p, Strategy strategy) {
    const double cv = conditional_infl_variance(p);
    switch (strategy) {
        case Strategy::PureStabilization: {
            const double al2 = 1.0 + p.alpha * p.lambda * p.lambda;
            const double var_pi = al2 * al2 * cv / (al2 * al2 - 1.0);
            return {p.pi_n, 0.0, var_pi, p.delta - p.gamma * var_pi};
        }
        case Strategy::GrowthMax: {
            const double dev = 1.0 / (2.0 * p.gamma * p.lambda);
            return {p.pi_n + dev, 0.0, cv, p.delta - p.gamma * (dev * dev + cv)};
        }
        case Strategy::StrictInflationTargeting:
            return {p.pi_n, 0.0, cv, p.delta - p.gamma * cv};
    }
    throw Error("UnknownStrategy", "unhandled strategy tag");
}

double loss_value(const ModelParams& p, const EconState& state, double i) {
    const auto [ex, epi] = conditional_means(p, state, i);
    const double dpi = epi - p.pi_n;
    return ex * ex + p.sigma_x * p.sigma_x +
           p.alpha * (dpi * dpi + conditional_infl_variance(p));
}

}  // namespace mogir
