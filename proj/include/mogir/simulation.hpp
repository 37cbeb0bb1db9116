#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mogir/model.hpp"
#include "mogir/policy.hpp"

namespace mogir {

/// Monte Carlo contract. `initial` defaults to the deterministic
/// steady state of the validated params when unset.
struct SimConfig {
    std::int64_t horizon = 10000;
    std::int64_t burn_in = 1000;
    std::int64_t n_paths = 100;
    std::uint64_t seed = 12345;
    std::optional<EconState> initial;
};

SimConfig validate_sim_config(const SimConfig& cfg);

struct MomentEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::int64_t n_obs = 0;
};

struct Moments {
    MomentEstimate mean_pi;
    MomentEstimate mean_x;
    MomentEstimate var_pi;
    MomentEstimate mean_growth;
    MomentEstimate lag1_autocorr_pi;
    const char* se_method = "";  ///< "between-path" or "batch-means"
};

/// Gaussian shock draw fully determined by (seed, path_index, t):
/// identical inputs give identical draws under any call order or
/// thread schedule.
ShockDraw generate_shocks(const SimConfig& cfg, const ModelParams& p, std::uint64_t path_index,
                          std::uint64_t t);

/// Simulates one path under the rule. Element 0 is the initial
/// condition, elements 1..horizon the simulated periods; every
/// element's `i` holds the rate the rule sets at the end of that
/// period. y == y_pot + x bit-exactly throughout.
std::vector<EconState> simulate_path(const ModelParams& p, const PolicyRule& rule,
                                     const SimConfig& cfg, std::uint64_t path_index);

/// All paths, optionally in parallel (n_threads 0 = auto). Results are
/// bit-identical for any thread count: paths are independent counter-
/// addressed work units written to disjoint slots.
std::vector<std::vector<EconState>> simulate_paths(const ModelParams& p, const PolicyRule& rule,
                                                   const SimConfig& cfg, int n_threads = 0);

/// Pooled post-burn-in sample moments with Monte Carlo standard
/// errors: between-path dispersion when more than one path, batch
/// means with sqrt(T) batches otherwise. Aggregation runs in path
/// order with compensated summation, so reported values do not depend
/// on the execution schedule.
Moments estimate_moments(const std::vector<std::vector<EconState>>& paths,
                         std::int64_t burn_in);

}  // namespace mogir
