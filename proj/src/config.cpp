#include "mogir/config.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace mogir {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0')
        throw Error("ConfigError", "key '" + key + "' has non-numeric value '" + value + "'");
    return v;
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const long long v = std::strtoll(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0')
        throw Error("ConfigError", "key '" + key + "' has non-integer value '" + value + "'");
    return v;
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || value.find('-') != std::string::npos)
        throw Error("ConfigError", "key '" + key + "' has non-unsigned value '" + value + "'");
    return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw Error("ConfigError", "key '" + key + "' must be true or false, got '" + value + "'");
}

}  // namespace

ModelParams default_params() {
    ModelParams p{};
    p.beta = 0.8;
    p.phi = 0.5;
    p.lambda = 0.3;
    p.delta = 0.005;
    p.gamma = 2.0;
    p.r = 0.02;
    p.pi_n = 0.02;
    p.alpha = 1.0;
    p.sigma_x = 0.01;
    p.sigma_pi = 0.01;
    p.sigma_y = 0.01;
    return p;
}

RunConfig default_run_config() {
    RunConfig cfg;
    cfg.params = default_params();
    cfg.sim.horizon = 11000;
    cfg.sim.burn_in = 1000;
    cfg.sim.n_paths = 100;
    cfg.sim.seed = 12345;
    cfg.reference_state = steady_state(cfg.params);
    cfg.sim.initial = cfg.reference_state;
    return cfg;
}

RunConfig load_config(std::istream& in) {
    std::map<std::string, std::string> values;  // "section.key" -> raw value
    bool percent = false;
    std::string section;
    std::string line;
    int line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw Error("ConfigError",
                            "line " + std::to_string(line_no) + ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "params" && section != "sim" && section != "state")
                throw Error("ConfigError", "unknown section [" + section + "]");
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error("ConfigError",
                        "line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw Error("ConfigError",
                        "line " + std::to_string(line_no) + ": expected 'key = value'");

        if (section.empty()) {
            if (key == "percent") {
                percent = parse_bool(key, value);
                continue;
            }
            throw Error("ConfigError", "unknown top-level key '" + key + "'");
        }
        if (!values.emplace(section + "." + key, value).second)
            throw Error("ConfigError", "duplicate key '" + key + "' in [" + section + "]");
    }

    RunConfig cfg = default_run_config();
    const double rate_scale = percent ? 0.01 : 1.0;

    // Fields holding rates or shock scales accept percent input; log
    // levels (y_pot) and dimensionless parameters never convert.
    const std::map<std::string, std::pair<double*, bool>> param_keys = {
        {"params.beta", {&cfg.params.beta, false}},
        {"params.phi", {&cfg.params.phi, false}},
        {"params.lambda", {&cfg.params.lambda, false}},
        {"params.delta", {&cfg.params.delta, true}},
        {"params.gamma", {&cfg.params.gamma, false}},
        {"params.r", {&cfg.params.r, true}},
        {"params.pi_n", {&cfg.params.pi_n, true}},
        {"params.alpha", {&cfg.params.alpha, false}},
        {"params.sigma_x", {&cfg.params.sigma_x, true}},
        {"params.sigma_pi", {&cfg.params.sigma_pi, true}},
        {"params.sigma_y", {&cfg.params.sigma_y, true}},
    };
    const std::map<std::string, std::pair<double*, bool>> state_keys = {
        {"state.x", {&cfg.reference_state.x, true}},
        {"state.pi", {&cfg.reference_state.pi, true}},
        {"state.y_pot", {&cfg.reference_state.y_pot, false}},
        {"state.i", {&cfg.reference_state.i, true}},
    };

    // Params and sim first: the state section's defaults are the
    // steady state of the params actually in force.
    for (const auto& [full_key, raw] : values) {
        if (auto it = param_keys.find(full_key); it != param_keys.end()) {
            const auto [target, rate_like] = it->second;
            *target = parse_double(full_key, raw) * (rate_like ? rate_scale : 1.0);
        } else if (full_key == "sim.horizon") {
            cfg.sim.horizon = parse_int(full_key, raw);
        } else if (full_key == "sim.burn_in") {
            cfg.sim.burn_in = parse_int(full_key, raw);
        } else if (full_key == "sim.n_paths") {
            cfg.sim.n_paths = parse_int(full_key, raw);
        } else if (full_key == "sim.seed") {
            cfg.sim.seed = parse_uint(full_key, raw);
        } else if (!state_keys.count(full_key)) {
            throw Error("ConfigError", "unknown key '" + full_key + "'");
        }
    }

    validate_params(cfg.params);
    validate_sim_config(cfg.sim);
    cfg.reference_state = steady_state(cfg.params);

    for (const auto& [full_key, raw] : values) {
        if (auto it = state_keys.find(full_key); it != state_keys.end()) {
            const auto [target, rate_like] = it->second;
            *target = parse_double(full_key, raw) * (rate_like ? rate_scale : 1.0);
        }
    }
    cfg.reference_state.y = cfg.reference_state.y_pot + cfg.reference_state.x;
    cfg.sim.initial = cfg.reference_state;
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("ConfigError", "cannot open config file '" + path + "'");
    return load_config(in);
}

}  // namespace mogir
