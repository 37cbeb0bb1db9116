#include "mogir/render.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "mogir/analytics.hpp"

namespace mogir {

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double sig12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kMomentNames[] = {"mean_pi", "mean_x", "var_pi", "mean_growth",
                                        "lag1_autocorr_pi"};

const MomentEstimate& moment_by_index(const Moments& m, int idx) {
    switch (idx) {
        case 0: return m.mean_pi;
        case 1: return m.mean_x;
        case 2: return m.var_pi;
        case 3: return m.mean_growth;
        default: return m.lag1_autocorr_pi;
    }
}

// Closed-form counterpart of each estimated moment; the lag-1
// autocorrelation target is the law of motion's pi_lagpi.
double analytic_by_index(const ModelParams& p, Strategy s, int idx) {
    const LongRunMoments lr = longrun_moments(p, s);
    switch (idx) {
        case 0: return lr.mean_pi;
        case 1: return lr.mean_x;
        case 2: return lr.var_pi;
        case 3: return lr.mean_growth;
        default: return law_of_motion(p, s).pi_lagpi;
    }
}

bool off_target(double analytic, const MomentEstimate& sim) {
    return std::fabs(sim.value - analytic) > std::max(4.0 * sim.std_error, 1e-12);
}

// Long-run growth cost of abandoning strict targeting; coincides with
// the one-step temptation gap.
double long_run_gap(const ComparisonReport& report) {
    double g_it = 0.0, g_gm = 0.0;
    for (const StrategyReport& rep : report.per_strategy) {
        if (rep.strategy == Strategy::StrictInflationTargeting) g_it = rep.analytic.mean_growth;
        if (rep.strategy == Strategy::GrowthMax) g_gm = rep.analytic.mean_growth;
    }
    return g_it - g_gm;
}

struct NamedValue {
    const char* name;
    double value;
};

std::vector<NamedValue> param_rows(const ModelParams& p) {
    return {{"beta", p.beta},       {"phi", p.phi},           {"lambda", p.lambda},
            {"delta", p.delta},     {"gamma", p.gamma},       {"r", p.r},
            {"pi_n", p.pi_n},       {"alpha", p.alpha},       {"sigma_x", p.sigma_x},
            {"sigma_pi", p.sigma_pi}, {"sigma_y", p.sigma_y}};
}

ordered_json params_json(const ModelParams& p) {
    ordered_json j;
    for (const auto& row : param_rows(p)) j[row.name] = sig12(row.value);
    return j;
}

ordered_json state_json(const EconState& s) {
    ordered_json j;
    j["x"] = sig12(s.x);
    j["pi"] = sig12(s.pi);
    j["y_pot"] = sig12(s.y_pot);
    j["y"] = sig12(s.y);
    j["i"] = sig12(s.i);
    return j;
}

void table_params(std::ostream& os, const ModelParams& p) {
    os << "Parameters\n";
    for (const auto& row : param_rows(p))
        os << "  " << std::left << std::setw(10) << row.name << ' ' << fmt6(row.value) << '\n';
}

void table_state(std::ostream& os, const char* label, const EconState& s) {
    os << label << "  x=" << fmt6(s.x) << "  pi=" << fmt6(s.pi) << "  y_pot=" << fmt6(s.y_pot)
       << "  y=" << fmt6(s.y) << "  i=" << fmt6(s.i) << '\n';
}

void table_rules(std::ostream& os, const ModelParams& p) {
    os << "Policy rules  i = c0 + c_x*x + c_pi*(pi - pi_n)\n";
    os << "  " << std::left << std::setw(26) << "strategy" << std::right << std::setw(12) << "c0"
       << std::setw(12) << "c_x" << std::setw(12) << "c_pi" << "  taylor\n";
    for (Strategy s : kAllStrategies) {
        const PolicyRule rule = make_rule(p, s);
        os << "  " << std::left << std::setw(26) << strategy_name(s) << std::right
           << std::setw(12) << fmt6(rule.c0) << std::setw(12) << fmt6(rule.c_x) << std::setw(12)
           << fmt6(rule.c_pi) << "  " << (satisfies_taylor_principle(rule) ? "yes" : "no")
           << '\n';
    }
}

ordered_json rule_json(const PolicyRule& rule) {
    ordered_json j;
    j["c0"] = sig12(rule.c0);
    j["c_x"] = sig12(rule.c_x);
    j["c_pi"] = sig12(rule.c_pi);
    j["taylor_principle"] = satisfies_taylor_principle(rule);
    return j;
}

ordered_json law_json(const LawOfMotion& law) {
    ordered_json j;
    j["x_const"] = sig12(law.x_const);
    j["x_lagpi"] = sig12(law.x_lagpi);
    j["pi_const"] = sig12(law.pi_const);
    j["pi_lagpi"] = sig12(law.pi_lagpi);
    return j;
}

ordered_json longrun_json(const LongRunMoments& lr) {
    ordered_json j;
    j["mean_pi"] = sig12(lr.mean_pi);
    j["mean_x"] = sig12(lr.mean_x);
    j["var_pi"] = sig12(lr.var_pi);
    j["mean_growth"] = sig12(lr.mean_growth);
    return j;
}

}  // namespace

void render_analyze(std::ostream& os, OutputFormat format, const ModelParams& p) {
    switch (format) {
        case OutputFormat::Table: {
            table_params(os, p);
            os << '\n';
            table_rules(os, p);
            os << "\nLaw of motion  x_t = x_const + x_lagpi*dpi + eps_x;  dpi_t = pi_const + "
                  "pi_lagpi*dpi + lambda*eps_x + eps_pi\n";
            os << "  " << std::left << std::setw(26) << "strategy" << std::right << std::setw(12)
               << "x_const" << std::setw(12) << "x_lagpi" << std::setw(12) << "pi_const"
               << std::setw(12) << "pi_lagpi" << '\n';
            for (Strategy s : kAllStrategies) {
                const LawOfMotion law = law_of_motion(p, s);
                os << "  " << std::left << std::setw(26) << strategy_name(s) << std::right
                   << std::setw(12) << fmt6(law.x_const) << std::setw(12) << fmt6(law.x_lagpi)
                   << std::setw(12) << fmt6(law.pi_const) << std::setw(12) << fmt6(law.pi_lagpi)
                   << '\n';
            }
            os << "\nLong-run moments (analytic)\n";
            os << "  " << std::left << std::setw(26) << "strategy" << std::right << std::setw(14)
               << "mean_pi" << std::setw(14) << "mean_x" << std::setw(14) << "var_pi"
               << std::setw(14) << "mean_growth" << '\n';
            for (Strategy s : kAllStrategies) {
                const LongRunMoments lr = longrun_moments(p, s);
                os << "  " << std::left << std::setw(26) << strategy_name(s) << std::right
                   << std::setw(14) << fmt6(lr.mean_pi) << std::setw(14) << fmt6(lr.mean_x)
                   << std::setw(14) << fmt6(lr.var_pi) << std::setw(14) << fmt6(lr.mean_growth)
                   << '\n';
            }
            break;
        }
        case OutputFormat::Csv: {
            os << "section,strategy,statistic,value\n";
            for (const auto& row : param_rows(p))
                os << "params,," << row.name << ',' << fmt6(row.value) << '\n';
            for (Strategy s : kAllStrategies) {
                const PolicyRule rule = make_rule(p, s);
                const char* name = strategy_name(s);
                os << "rules," << name << ",c0," << fmt6(rule.c0) << '\n';
                os << "rules," << name << ",c_x," << fmt6(rule.c_x) << '\n';
                os << "rules," << name << ",c_pi," << fmt6(rule.c_pi) << '\n';
                os << "rules," << name << ",taylor_principle,"
                   << (satisfies_taylor_principle(rule) ? 1 : 0) << '\n';
            }
            for (Strategy s : kAllStrategies) {
                const LawOfMotion law = law_of_motion(p, s);
                const char* name = strategy_name(s);
                os << "law_of_motion," << name << ",x_const," << fmt6(law.x_const) << '\n';
                os << "law_of_motion," << name << ",x_lagpi," << fmt6(law.x_lagpi) << '\n';
                os << "law_of_motion," << name << ",pi_const," << fmt6(law.pi_const) << '\n';
                os << "law_of_motion," << name << ",pi_lagpi," << fmt6(law.pi_lagpi) << '\n';
            }
            for (Strategy s : kAllStrategies) {
                const LongRunMoments lr = longrun_moments(p, s);
                const char* name = strategy_name(s);
                os << "longrun_analytic," << name << ",mean_pi," << fmt6(lr.mean_pi) << '\n';
                os << "longrun_analytic," << name << ",mean_x," << fmt6(lr.mean_x) << '\n';
                os << "longrun_analytic," << name << ",var_pi," << fmt6(lr.var_pi) << '\n';
                os << "longrun_analytic," << name << ",mean_growth," << fmt6(lr.mean_growth)
                   << '\n';
            }
            break;
        }
        case OutputFormat::Json: {
            ordered_json j;
            j["command"] = "analyze";
            j["params"] = params_json(p);
            ordered_json strategies;
            for (Strategy s : kAllStrategies) {
                ordered_json entry;
                entry["rule"] = rule_json(make_rule(p, s));
                entry["law_of_motion"] = law_json(law_of_motion(p, s));
                entry["longrun_analytic"] = longrun_json(longrun_moments(p, s));
                strategies[strategy_name(s)] = entry;
            }
            j["strategies"] = strategies;
            os << j.dump(2) << '\n';
            break;
        }
    }
}

void render_simulate(std::ostream& os, OutputFormat format, const RunConfig& cfg,
                     Strategy strategy, const Moments& moments) {
    const ModelParams& p = cfg.params;
    switch (format) {
        case OutputFormat::Table: {
            table_params(os, p);
            table_state(os, "Initial state", cfg.sim.initial.value_or(steady_state(p)));
            os << "\nSimulated moments  strategy=" << strategy_name(strategy)
               << "  observations=" << moments.mean_pi.n_obs
               << "  std errors: " << moments.se_method << '\n';
            os << "  " << std::left << std::setw(18) << "statistic" << std::right << std::setw(14)
               << "estimate" << std::setw(14) << "std_error" << std::setw(14) << "analytic"
               << "  flag\n";
            for (int idx = 0; idx < 5; ++idx) {
                const MomentEstimate& est = moment_by_index(moments, idx);
                const double target = analytic_by_index(p, strategy, idx);
                os << "  " << std::left << std::setw(18) << kMomentNames[idx] << std::right
                   << std::setw(14) << fmt6(est.value) << std::setw(14) << fmt6(est.std_error)
                   << std::setw(14) << fmt6(target) << "  "
                   << (off_target(target, est) ? "DISCREPANCY" : "") << '\n';
            }
            break;
        }
        case OutputFormat::Csv: {
            os << "section,strategy,statistic,value,std_error,flag\n";
            for (const auto& row : param_rows(p))
                os << "params,," << row.name << ',' << fmt6(row.value) << ",,\n";
            {
                const EconState s = cfg.sim.initial.value_or(steady_state(p));
                const NamedValue rows[] = {
                    {"x", s.x}, {"pi", s.pi}, {"y_pot", s.y_pot}, {"y", s.y}, {"i", s.i}};
                for (const auto& row : rows)
                    os << "initial_state,," << row.name << ',' << fmt6(row.value) << ",,\n";
            }
            const char* name = strategy_name(strategy);
            for (int idx = 0; idx < 5; ++idx) {
                const MomentEstimate& est = moment_by_index(moments, idx);
                os << "moments," << name << ',' << kMomentNames[idx] << ',' << fmt6(est.value)
                   << ',' << fmt6(est.std_error) << ','
                   << (off_target(analytic_by_index(p, strategy, idx), est) ? "DISCREPANCY" : "")
                   << '\n';
                os << "moments_analytic," << name << ',' << kMomentNames[idx] << ','
                   << fmt6(analytic_by_index(p, strategy, idx)) << ",,\n";
            }
            os << "meta,," << "n_obs," << moments.mean_pi.n_obs << ",,\n";
            os << "meta,," << "se_method,,," << moments.se_method << '\n';
            break;
        }
        case OutputFormat::Json: {
            ordered_json j;
            j["command"] = "simulate";
            j["strategy"] = strategy_name(strategy);
            j["params"] = params_json(p);
            j["initial_state"] = state_json(cfg.sim.initial.value_or(steady_state(p)));
            j["n_obs"] = moments.mean_pi.n_obs;
            j["se_method"] = moments.se_method;
            ordered_json stats;
            for (int idx = 0; idx < 5; ++idx) {
                const MomentEstimate& est = moment_by_index(moments, idx);
                const double target = analytic_by_index(p, strategy, idx);
                ordered_json cell;
                cell["estimate"] = sig12(est.value);
                cell["std_error"] = sig12(est.std_error);
                cell["analytic"] = sig12(target);
                cell["discrepancy"] = off_target(target, est);
                stats[kMomentNames[idx]] = cell;
            }
            j["moments"] = stats;
            os << j.dump(2) << '\n';
            break;
        }
    }
}

void render_dump_paths(std::ostream& os, const std::vector<std::vector<EconState>>& paths) {
    os << "t,x,pi,y_pot,y,i\n";
    char buf[160];
    for (const auto& path : paths) {
        for (std::size_t t = 0; t < path.size(); ++t) {
            const EconState& s = path[t];
            std::snprintf(buf, sizeof buf, "%zu,%.12g,%.12g,%.12g,%.12g,%.12g\n", t, s.x, s.pi,
                          s.y_pot, s.y, s.i);
            os << buf;
        }
    }
}

void render_compare(std::ostream& os, OutputFormat format, const RunConfig& cfg,
                    const ComparisonReport& report) {
    const ModelParams& p = cfg.params;
    switch (format) {
        case OutputFormat::Table: {
            table_params(os, p);
            table_state(os, "Reference state", cfg.reference_state);
            os << '\n';
            table_rules(os, p);

            os << "\nLaw of motion\n";
            os << "  " << std::left << std::setw(26) << "strategy" << std::right << std::setw(12)
               << "x_const" << std::setw(12) << "x_lagpi" << std::setw(12) << "pi_const"
               << std::setw(12) << "pi_lagpi" << '\n';
            for (const StrategyReport& rep : report.per_strategy) {
                os << "  " << std::left << std::setw(26) << strategy_name(rep.strategy)
                   << std::right << std::setw(12) << fmt6(rep.law.x_const) << std::setw(12)
                   << fmt6(rep.law.x_lagpi) << std::setw(12) << fmt6(rep.law.pi_const)
                   << std::setw(12) << fmt6(rep.law.pi_lagpi) << '\n';
            }

            os << "\nLong-run targets\n";
            os << "  " << std::left << std::setw(26) << "strategy" << std::setw(14) << "statistic"
               << std::right << std::setw(14) << "analytic" << std::setw(14) << "simulated"
               << std::setw(14) << "std_error" << "  flag\n";
            for (const StrategyReport& rep : report.per_strategy) {
                const struct {
                    const char* name;
                    double analytic;
                    const MomentEstimate& sim;
                } rows[] = {
                    {"mean_pi", rep.analytic.mean_pi, rep.simulated.mean_pi},
                    {"mean_x", rep.analytic.mean_x, rep.simulated.mean_x},
                    {"var_pi", rep.analytic.var_pi, rep.simulated.var_pi},
                };
                for (const auto& row : rows) {
                    os << "  " << std::left << std::setw(26) << strategy_name(rep.strategy)
                       << std::setw(14) << row.name << std::right << std::setw(14)
                       << fmt6(row.analytic) << std::setw(14) << fmt6(row.sim.value)
                       << std::setw(14) << fmt6(row.sim.std_error) << "  "
                       << (off_target(row.analytic, row.sim) ? "DISCREPANCY" : "") << '\n';
                }
            }

            os << "\nOne-step expected growth at the reference state\n";
            os << "  " << std::left << std::setw(26) << "strategy" << std::right << std::setw(14)
               << "analytic" << std::setw(14) << "simulated" << std::setw(14) << "std_error"
               << "  flag\n";
            for (const StrategyReport& rep : report.per_strategy) {
                os << "  " << std::left << std::setw(26) << strategy_name(rep.strategy)
                   << std::right << std::setw(14) << fmt6(rep.one_step_growth_analytic)
                   << std::setw(14) << fmt6(rep.one_step_growth_sim.value) << std::setw(14)
                   << fmt6(rep.one_step_growth_sim.std_error) << "  "
                   << (off_target(rep.one_step_growth_analytic, rep.one_step_growth_sim)
                           ? "DISCREPANCY"
                           : "")
                   << '\n';
            }

            os << "\nLong-run growth\n";
            os << "  " << std::left << std::setw(26) << "strategy" << std::right << std::setw(14)
               << "analytic" << std::setw(14) << "simulated" << std::setw(14) << "std_error"
               << "  flag\n";
            for (const StrategyReport& rep : report.per_strategy) {
                os << "  " << std::left << std::setw(26) << strategy_name(rep.strategy)
                   << std::right << std::setw(14) << fmt6(rep.analytic.mean_growth)
                   << std::setw(14) << fmt6(rep.simulated.mean_growth.value) << std::setw(14)
                   << fmt6(rep.simulated.mean_growth.std_error) << "  "
                   << (off_target(rep.analytic.mean_growth, rep.simulated.mean_growth)
                           ? "DISCREPANCY"
                           : "")
                   << '\n';
            }

            os << "\nRanking by analytic long-run growth\n";
            for (std::size_t k = 0; k < report.ranking.size(); ++k)
                os << "  " << (k + 1) << ". " << strategy_name(report.ranking[k]) << '\n';

            os << "\nTime inconsistency\n";
            os << "  one-step growth gap (GrowthMax - StrictInflationTargeting): "
               << fmt6(report.time_inconsistency_gap) << '\n';
            os << "  long-run growth shortfall of GrowthMax vs targeting:        "
               << fmt6(long_run_gap(report)) << '\n';
            os << "  closed form 1/(4*gamma*lambda^2), equal to both:            "
               << fmt6(report.gap_closed_form) << '\n';
            if (report.any_discrepancy) os << "\nDISCREPANCY flags present (see tables above)\n";
            break;
        }
        case OutputFormat::Csv: {
            os << "section,strategy,statistic,analytic,simulated,std_error,flag\n";
            for (const auto& row : param_rows(p))
                os << "params,," << row.name << ',' << fmt6(row.value) << ",,,\n";
            {
                const EconState& s = cfg.reference_state;
                const NamedValue rows[] = {
                    {"x", s.x}, {"pi", s.pi}, {"y_pot", s.y_pot}, {"y", s.y}, {"i", s.i}};
                for (const auto& row : rows)
                    os << "reference_state,," << row.name << ',' << fmt6(row.value) << ",,,\n";
            }
            for (const StrategyReport& rep : report.per_strategy) {
                const char* name = strategy_name(rep.strategy);
                os << "rules," << name << ",c0," << fmt6(rep.rule.c0) << ",,,\n";
                os << "rules," << name << ",c_x," << fmt6(rep.rule.c_x) << ",,,\n";
                os << "rules," << name << ",c_pi," << fmt6(rep.rule.c_pi) << ",,,\n";
                os << "law_of_motion," << name << ",x_const," << fmt6(rep.law.x_const)
                   << ",,,\n";
                os << "law_of_motion," << name << ",x_lagpi," << fmt6(rep.law.x_lagpi)
                   << ",,,\n";
                os << "law_of_motion," << name << ",pi_const," << fmt6(rep.law.pi_const)
                   << ",,,\n";
                os << "law_of_motion," << name << ",pi_lagpi," << fmt6(rep.law.pi_lagpi)
                   << ",,,\n";
            }
            for (const StrategyReport& rep : report.per_strategy) {
                const char* name = strategy_name(rep.strategy);
                const struct {
                    const char* section;
                    const char* stat;
                    double analytic;
                    const MomentEstimate& sim;
                } rows[] = {
                    {"longrun_targets", "mean_pi", rep.analytic.mean_pi, rep.simulated.mean_pi},
                    {"longrun_targets", "mean_x", rep.analytic.mean_x, rep.simulated.mean_x},
                    {"longrun_targets", "var_pi", rep.analytic.var_pi, rep.simulated.var_pi},
                    {"one_step_growth", "expected_growth", rep.one_step_growth_analytic,
                     rep.one_step_growth_sim},
                    {"longrun_growth", "mean_growth", rep.analytic.mean_growth,
                     rep.simulated.mean_growth},
                };
                for (const auto& row : rows) {
                    os << row.section << ',' << name << ',' << row.stat << ','
                       << fmt6(row.analytic) << ',' << fmt6(row.sim.value) << ','
                       << fmt6(row.sim.std_error) << ','
                       << (off_target(row.analytic, row.sim) ? "DISCREPANCY" : "") << '\n';
                }
            }
            for (std::size_t k = 0; k < report.ranking.size(); ++k)
                os << "ranking," << strategy_name(report.ranking[k]) << ",rank," << (k + 1)
                   << ",,,\n";
            os << "time_inconsistency,,one_step_gap," << fmt6(report.time_inconsistency_gap)
               << ",,,\n";
            os << "time_inconsistency,,long_run_gap," << fmt6(long_run_gap(report)) << ",,,\n";
            os << "time_inconsistency,,closed_form," << fmt6(report.gap_closed_form) << ",,,\n";
            break;
        }
        case OutputFormat::Json: {
            ordered_json j;
            j["command"] = "compare";
            j["params"] = params_json(p);
            j["reference_state"] = state_json(cfg.reference_state);
            ordered_json strategies;
            for (const StrategyReport& rep : report.per_strategy) {
                ordered_json entry;
                entry["rule"] = rule_json(rep.rule);
                entry["law_of_motion"] = law_json(rep.law);
                ordered_json longrun;
                const struct {
                    const char* stat;
                    double analytic;
                    const MomentEstimate& sim;
                } rows[] = {
                    {"mean_pi", rep.analytic.mean_pi, rep.simulated.mean_pi},
                    {"mean_x", rep.analytic.mean_x, rep.simulated.mean_x},
                    {"var_pi", rep.analytic.var_pi, rep.simulated.var_pi},
                    {"mean_growth", rep.analytic.mean_growth, rep.simulated.mean_growth},
                };
                for (const auto& row : rows) {
                    ordered_json cell;
                    cell["analytic"] = sig12(row.analytic);
                    cell["simulated"] = sig12(row.sim.value);
                    cell["std_error"] = sig12(row.sim.std_error);
                    cell["discrepancy"] = off_target(row.analytic, row.sim);
                    longrun[row.stat] = cell;
                }
                entry["longrun"] = longrun;
                ordered_json one_step;
                one_step["analytic"] = sig12(rep.one_step_growth_analytic);
                one_step["simulated"] = sig12(rep.one_step_growth_sim.value);
                one_step["std_error"] = sig12(rep.one_step_growth_sim.std_error);
                one_step["discrepancy"] =
                    off_target(rep.one_step_growth_analytic, rep.one_step_growth_sim);
                entry["one_step_growth"] = one_step;
                entry["discrepancies"] = rep.discrepancies;
                strategies[strategy_name(rep.strategy)] = entry;
            }
            j["strategies"] = strategies;
            ordered_json ranking = ordered_json::array();
            for (Strategy s : report.ranking) ranking.push_back(strategy_name(s));
            j["ranking"] = ranking;
            ordered_json gaps;
            gaps["one_step_gap"] = sig12(report.time_inconsistency_gap);
            gaps["long_run_gap"] = sig12(long_run_gap(report));
            gaps["closed_form"] = sig12(report.gap_closed_form);
            j["time_inconsistency"] = gaps;
            j["any_discrepancy"] = report.any_discrepancy;
            os << j.dump(2) << '\n';
            break;
        }
    }
}

void render_verify(std::ostream& os, OutputFormat format, const std::vector<VerifyCheck>& checks) {
    switch (format) {
        case OutputFormat::Table: {
            os << "Verification checks\n";
            for (const VerifyCheck& c : checks) {
                os << "  " << std::left << std::setw(12) << c.name << " max deviation "
                   << std::setw(12) << fmt6(c.max_deviation) << " tolerance " << std::setw(10)
                   << fmt6(c.tolerance) << (c.pass ? " PASS" : " FAIL");
                if (!c.worst_case.empty()) os << "  (worst: " << c.worst_case << ')';
                os << '\n';
            }
            break;
        }
        case OutputFormat::Csv: {
            os << "check,max_deviation,tolerance,status,worst_case\n";
            for (const VerifyCheck& c : checks) {
                os << c.name << ',' << fmt6(c.max_deviation) << ',' << fmt6(c.tolerance) << ','
                   << (c.pass ? "PASS" : "FAIL") << ',' << c.worst_case << '\n';
            }
            break;
        }
        case OutputFormat::Json: {
            ordered_json j;
            j["command"] = "verify";
            ordered_json arr = ordered_json::array();
            for (const VerifyCheck& c : checks) {
                ordered_json entry;
                entry["check"] = c.name;
                entry["max_deviation"] = sig12(c.max_deviation);
                entry["tolerance"] = sig12(c.tolerance);
                entry["pass"] = c.pass;
                entry["worst_case"] = c.worst_case;
                arr.push_back(entry);
            }
            j["checks"] = arr;
            os << j.dump(2) << '\n';
            break;
        }
    }
}

}  // namespace mogir
