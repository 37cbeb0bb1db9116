#include "mogir/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "mogir/rng.hpp"

namespace mogir {

namespace {

struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Sample statistics over one observation window [first, last] of a
// path; states[t-1] supplies the growth and autocorrelation lags.
struct WindowStats {
    double mean_pi = 0.0;
    double mean_x = 0.0;
    double var_pi = 0.0;
    double mean_growth = 0.0;
    double rho = 0.0;
};

WindowStats window_stats(const std::vector<EconState>& states, std::int64_t first,
                         std::int64_t last) {
    const double n = static_cast<double>(last - first + 1);
    KahanSum spi, sx, sg;
    for (std::int64_t t = first; t <= last; ++t) {
        spi.add(states[t].pi);
        sx.add(states[t].x);
        sg.add(states[t].y - states[t - 1].y);
    }
    WindowStats w;
    w.mean_pi = spi.sum / n;
    w.mean_x = sx.sum / n;
    w.mean_growth = sg.sum / n;

    KahanSum ss, acov;
    for (std::int64_t t = first; t <= last; ++t) {
        const double d = states[t].pi - w.mean_pi;
        ss.add(d * d);
        acov.add(d * (states[t - 1].pi - w.mean_pi));
    }
    w.var_pi = n > 1.0 ? ss.sum / (n - 1.0) : 0.0;
    w.rho = ss.sum > 0.0 ? acov.sum / ss.sum : 0.0;
    return w;
}

double spread_std_error(const std::vector<double>& values) {
    const std::size_t n = values.size();
    if (n < 2) return 0.0;
    KahanSum s;
    for (double v : values) s.add(v);
    const double mean = s.sum / static_cast<double>(n);
    KahanSum ss;
    for (double v : values) ss.add((v - mean) * (v - mean));
    return std::sqrt(ss.sum / (static_cast<double>(n - 1) * static_cast<double>(n)));
}

}  // namespace

SimConfig validate_sim_config(const SimConfig& cfg) {
    if (cfg.horizon < 1)
        throw Error("NonPositiveHorizon",
                    "horizon must be >= 1, got " + std::to_string(cfg.horizon));
    if (cfg.burn_in < 0)
        throw Error("NegativeBurnIn",
                    "burn_in must be >= 0, got " + std::to_string(cfg.burn_in));
    if (cfg.burn_in >= cfg.horizon)
        throw Error("BurnInExceedsHorizon", "burn_in " + std::to_string(cfg.burn_in) +
                                                " must be < horizon " +
                                                std::to_string(cfg.horizon));
    if (cfg.n_paths < 1)
        throw Error("NonPositivePathCount",
                    "n_paths must be >= 1, got " + std::to_string(cfg.n_paths));
    return cfg;
}

ShockDraw generate_shocks(const SimConfig& cfg, const ModelParams& p, std::uint64_t path_index,
                          std::uint64_t t) {
    const auto z = rng::standard_normal_triple(cfg.seed, path_index, t);
    return {p.sigma_x * z[0], p.sigma_pi * z[1], p.sigma_y * z[2]};
}

std::vector<EconState> simulate_path(const ModelParams& p, const PolicyRule& rule,
                                     const SimConfig& cfg, std::uint64_t path_index) {
    std::vector<EconState> states;
    states.reserve(static_cast<std::size_t>(cfg.horizon) + 1);

    EconState s0 = cfg.initial.value_or(steady_state(p));
    s0.y = s0.y_pot + s0.x;
    states.push_back(s0);

    for (std::int64_t t = 0; t < cfg.horizon; ++t) {
        EconState& prev = states.back();
        prev.i = apply_rule(rule, prev, p.pi_n);

        const double forecast = structural_fixed_point(p, prev, prev.i);
        const double sq_dev = conditional_sq_deviation(p, forecast);
        const ShockDraw shocks = generate_shocks(cfg, p, path_index, static_cast<std::uint64_t>(t));

        const auto [x, pi] = reduced_form_step(p, prev, shocks);
        const double y_pot = potential_output_step(p, prev.y_pot, sq_dev, shocks.eps_y);
        states.push_back(EconState::from_gap(x, pi, y_pot, 0.0));
    }
    states.back().i = apply_rule(rule, states.back(), p.pi_n);
    return states;
}

std::vector<std::vector<EconState>> simulate_paths(const ModelParams& p, const PolicyRule& rule,
                                                   const SimConfig& cfg, int n_threads) {
    validate_sim_config(cfg);
    const std::int64_t n_paths = cfg.n_paths;
    std::vector<std::vector<EconState>> paths(static_cast<std::size_t>(n_paths));

    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    const int workers = static_cast<int>(
        std::min<std::int64_t>(n_threads > 0 ? n_threads : hw, n_paths));

    if (workers <= 1) {
        for (std::int64_t k = 0; k < n_paths; ++k)
            paths[static_cast<std::size_t>(k)] =
                simulate_path(p, rule, cfg, static_cast<std::uint64_t>(k));
        return paths;
    }

    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::int64_t k = w; k < n_paths; k += workers)
                    paths[static_cast<std::size_t>(k)] =
                        simulate_path(p, rule, cfg, static_cast<std::uint64_t>(k));
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return paths;
}

Moments estimate_moments(const std::vector<std::vector<EconState>>& paths,
                         std::int64_t burn_in) {
    if (paths.empty()) throw Error("InsufficientData", "no paths supplied");
    const std::int64_t len = static_cast<std::int64_t>(paths.front().size());
    for (const auto& path : paths)
        if (static_cast<std::int64_t>(path.size()) != len)
            throw Error("InsufficientData", "paths have unequal lengths");
    const std::int64_t first = burn_in + 1;
    const std::int64_t last = len - 1;
    const std::int64_t per_path = last - first + 1;
    if (burn_in < 0 || per_path < 2)
        throw Error("InsufficientData", "burn-in leaves fewer than 2 observations per path");

    const std::int64_t n_paths = static_cast<std::int64_t>(paths.size());
    const std::int64_t n_obs = n_paths * per_path;
    const double n = static_cast<double>(n_obs);

    // Pooled moments, two passes, path-index order.
    KahanSum spi, sx, sg;
    for (const auto& path : paths) {
        for (std::int64_t t = first; t <= last; ++t) {
            spi.add(path[t].pi);
            sx.add(path[t].x);
            sg.add(path[t].y - path[t - 1].y);
        }
    }
    const double mean_pi = spi.sum / n;
    const double mean_x = sx.sum / n;
    const double mean_growth = sg.sum / n;

    KahanSum ss, acov;
    for (const auto& path : paths) {
        for (std::int64_t t = first; t <= last; ++t) {
            const double d = path[t].pi - mean_pi;
            ss.add(d * d);
            acov.add(d * (path[t - 1].pi - mean_pi));
        }
    }
    const double var_pi = n > 1.0 ? ss.sum / (n - 1.0) : 0.0;
    const double rho = ss.sum > 0.0 ? acov.sum / ss.sum : 0.0;

    // Standard errors from the dispersion of per-path (or per-batch)
    // replicates of each statistic.
    std::vector<WindowStats> reps;
    const char* method;
    if (n_paths > 1) {
        method = "between-path";
        reps.reserve(static_cast<std::size_t>(n_paths));
        for (const auto& path : paths) reps.push_back(window_stats(path, first, last));
    } else {
        method = "batch-means";
        const auto n_batches =
            static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(per_path))));
        if (n_batches >= 2) {
            const std::int64_t batch_len = per_path / n_batches;
            for (std::int64_t b = 0; b < n_batches; ++b) {
                const std::int64_t lo = first + b * batch_len;
                reps.push_back(window_stats(paths.front(), lo, lo + batch_len - 1));
            }
        }
    }

    std::vector<double> vals(reps.size());
    const auto se_of = [&](double WindowStats::*field) {
        for (std::size_t k = 0; k < reps.size(); ++k) vals[k] = reps[k].*field;
        return spread_std_error(vals);
    };

    Moments m;
    m.mean_pi = {mean_pi, se_of(&WindowStats::mean_pi), n_obs};
    m.mean_x = {mean_x, se_of(&WindowStats::mean_x), n_obs};
    m.var_pi = {var_pi, se_of(&WindowStats::var_pi), n_obs};
    m.mean_growth = {mean_growth, se_of(&WindowStats::mean_growth), n_obs};
    m.lag1_autocorr_pi = {rho, se_of(&WindowStats::rho), n_obs};
    m.se_method = method;
    return m;
}

}  // namespace mogir
