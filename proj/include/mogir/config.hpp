#pragma once

#include <iosfwd>
#include <string>

#include "mogir/model.hpp"
#include "mogir/simulation.hpp"

namespace mogir {

enum class OutputFormat { Table, Csv, Json };

/// Fully resolved run configuration: validated params, Monte Carlo
/// contract, and the state used both as simulation initial condition
/// and as the reference state for one-step comparisons.
struct RunConfig {
    ModelParams params{};
    SimConfig sim{};
    EconState reference_state{};
    OutputFormat output_format = OutputFormat::Table;
    std::string output_path;  ///< empty means standard output
};

/// Reference calibration used when no config file is given.
ModelParams default_params();

RunConfig default_run_config();

/// Parses the flat key-value config format: an optional top-level
/// `percent = true` (rate-like inputs given in percent, divided by 100
/// on load) followed by [params] / [sim] / [state] sections. Unknown
/// keys or malformed values raise Error("ConfigError"); parameter and
/// sim invariants are validated on load and raise their named
/// violations.
RunConfig load_config(std::istream& in);

RunConfig load_config_file(const std::string& path);

}  // namespace mogir
