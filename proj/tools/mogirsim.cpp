#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mogir/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitSimulation = 3;
constexpr int kExitStrictDiscrepancy = 4;
constexpr int kExitVerification = 5;

mogir::OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return mogir::OutputFormat::Csv;
    if (name == "json") return mogir::OutputFormat::Json;
    return mogir::OutputFormat::Table;
}

mogir::Strategy parse_strategy(const std::string& name) {
    if (name == "stab") return mogir::Strategy::PureStabilization;
    if (name == "growthmax") return mogir::Strategy::GrowthMax;
    return mogir::Strategy::StrictInflationTargeting;
}

int threads_from_env() {
    const char* env = std::getenv("MOGIR_SIM_THREADS");
    if (!env || !*env) return 0;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0)
        throw mogir::Error("ConfigError",
                           "MOGIR_SIM_THREADS must be a nonnegative integer, got '" +
                               std::string(env) + "'");
    return static_cast<int>(v);
}

struct Options {
    std::string config_path;
    std::string format = "table";
    std::string out_path;
    std::uint64_t seed = 0;
    std::string strategy = "it";
    bool dump_paths = false;
    bool strict = false;
    std::string checks;
    double inject_discrepancy = 0.0;
    double perturb_gamma = 0.0;
};

class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw mogir::Error("ConfigError", "cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulator and verifier for optimal monetary policy rules in a "
                 "backward-looking model where potential output growth peaks at the MOGIR"};
    app.require_subcommand(1);

    Options opt;
    bool seed_given = false;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", opt.config_path, "config file (flat key-value sections)");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"table", "csv", "json"}));
        cmd->add_option("--out", opt.out_path, "write output to this file instead of stdout");
    };
    const auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", opt.seed, "override the simulation seed")
            ->each([&](const std::string&) { seed_given = true; });
    };

    CLI::App* analyze = app.add_subcommand("analyze", "closed-form rules, laws of motion and "
                                                      "long-run moments");
    add_common(analyze);
    add_seed(analyze);

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo moments for one strategy");
    add_common(simulate);
    add_seed(simulate);
    simulate->add_option("--strategy", opt.strategy, "policy strategy")
        ->check(CLI::IsMember({"stab", "growthmax", "it"}))
        ->required();
    simulate->add_flag("--dump-paths", opt.dump_paths,
                       "emit per-period CSV (t,x,pi,y_pot,y,i) instead of moments");

    CLI::App* compare = app.add_subcommand("compare", "strategy comparison report");
    add_common(compare);
    add_seed(compare);
    compare->add_flag("--strict", opt.strict, "exit 4 if any DISCREPANCY flag is raised");
    compare
        ->add_option("--inject-discrepancy", opt.inject_discrepancy,
                     "testing aid: shift one analytic cell to force a DISCREPANCY")
        ->group("");

    CLI::App* verify = app.add_subcommand("verify", "oracle cross-check suites");
    add_common(verify);
    add_seed(verify);
    verify->add_option("--checks", opt.checks,
                       "comma-separated subset of: fixed-point,foc,moments");
    verify
        ->add_option("--perturb-gamma", opt.perturb_gamma,
                     "testing aid: bump gamma in the closed-form rule path only")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    // Configuration phase: any failure here is a config error.
    mogir::RunConfig cfg;
    int n_threads = 0;
    std::optional<OutputSink> sink;
    std::set<std::string> checks;
    try {
        cfg = opt.config_path.empty() ? mogir::default_run_config()
                                      : mogir::load_config_file(opt.config_path);
        if (seed_given) cfg.sim.seed = opt.seed;
        cfg.output_format = parse_format(opt.format);
        cfg.output_path = opt.out_path;
        n_threads = threads_from_env();
        sink.emplace(cfg.output_path);

        if (!opt.checks.empty()) {
            std::stringstream ss(opt.checks);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item != "fixed-point" && item != "foc" && item != "moments")
                    throw mogir::Error("ConfigError", "unknown check '" + item +
                                                          "'; valid: fixed-point, foc, moments");
                checks.insert(item);
            }
        }
    } catch (const mogir::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    std::ostream& os = sink->stream();

    try {
        if (*analyze) {
            mogir::render_analyze(os, cfg.output_format, cfg.params);
            return kExitOk;
        }

        if (*simulate) {
            const mogir::Strategy strategy = parse_strategy(opt.strategy);
            const mogir::PolicyRule rule = mogir::make_rule(cfg.params, strategy);
            const auto paths = mogir::simulate_paths(cfg.params, rule, cfg.sim, n_threads);
            if (opt.dump_paths) {
                mogir::render_dump_paths(os, paths);
            } else {
                const mogir::Moments moments = mogir::estimate_moments(paths, cfg.sim.burn_in);
                mogir::render_simulate(os, cfg.output_format, cfg, strategy, moments);
            }
            return kExitOk;
        }

        if (*compare) {
            mogir::ComparisonReport report =
                mogir::compare_strategies(cfg.params, cfg.sim, cfg.reference_state, n_threads);
            if (opt.inject_discrepancy != 0.0) {
                auto& rep = report.per_strategy[0];
                rep.analytic.mean_pi += opt.inject_discrepancy;
                const double tol =
                    std::max(4.0 * rep.simulated.mean_pi.std_error, 1e-12);
                if (std::fabs(rep.simulated.mean_pi.value - rep.analytic.mean_pi) > tol) {
                    rep.discrepancies.push_back("DISCREPANCY mean_pi");
                    report.any_discrepancy = true;
                }
            }
            mogir::render_compare(os, cfg.output_format, cfg, report);
            if (opt.strict && report.any_discrepancy) {
                std::cerr << "error: DISCREPANCY flags raised under --strict\n";
                return kExitStrictDiscrepancy;
            }
            return kExitOk;
        }

        if (*verify) {
            mogir::VerifyOptions vopt;
            vopt.checks = checks;
            vopt.closed_form_gamma_bump = opt.perturb_gamma;
            vopt.n_threads = n_threads;
            const auto results = mogir::run_verification(cfg, vopt);
            mogir::render_verify(os, cfg.output_format, results);
            for (const auto& check : results) {
                if (!check.pass) {
                    std::cerr << "error: verification check '" << check.name
                              << "' exceeded its tolerance (worst: " << check.worst_case
                              << ")\n";
                    return kExitVerification;
                }
            }
            return kExitOk;
        }
    } catch (const mogir::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSimulation;
    }
    return kExitOk;
}
