#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* cli_path() {
    const char* bin = std::getenv("MOGIRSIM_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "MOGIRSIM_BIN must point at the CLI binary");
    return bin;
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("mogirsim-test-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    const fs::path out = scratch_dir() / ("out" + std::to_string(counter));
    const fs::path err = scratch_dir() / ("err" + std::to_string(counter));
    ++counter;
    const std::string cmd = env + (env.empty() ? "" : " ") + "\"" + cli_path() + "\" " + args +
                            " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.out = slurp(out);
    res.err = slurp(err);
    return res;
}

fs::path write_config(const std::string& name, const std::string& body) {
    const fs::path path = scratch_dir() / name;
    std::ofstream(path) << body;
    return path;
}

const std::string kSmallSim = R"([sim]
horizon = 800
burn_in = 100
n_paths = 6
seed = 31
)";

}  // namespace

TEST_CASE("analyze succeeds and shares c_x across strategies") {
    const RunResult table = run_cli("analyze");
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("PureStabilization") != std::string::npos);

    const RunResult csv = run_cli("analyze --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("rules,PureStabilization,c_x,1.6\n") != std::string::npos);
    CHECK(csv.out.find("rules,GrowthMax,c_x,1.6\n") != std::string::npos);
    CHECK(csv.out.find("rules,StrictInflationTargeting,c_x,1.6\n") != std::string::npos);
}

TEST_CASE("analyze json carries the same numbers as the table") {
    const RunResult res = run_cli("analyze --format json");
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    const double c_pi = j["strategies"]["PureStabilization"]["rule"]["c_pi"].get<double>();
    CHECK(c_pi == doctest::Approx(1.4678899082568808).epsilon(1e-11));

    const RunResult table = run_cli("analyze");
    CHECK(table.out.find("1.46789") != std::string::npos);  // same value at 6 digits
}

TEST_CASE("invalid model parameters exit 2 with the named violation") {
    const fs::path cfg = write_config("bad.toml", "[params]\nlambda = 1.2\n");
    const RunResult res = run_cli("analyze --config " + cfg.string());
    CHECK(res.exit_code == 2);
    CHECK(res.err.find("SlopeOutOfRange") != std::string::npos);
}

TEST_CASE("unknown flags and commands exit 2") {
    CHECK(run_cli("analyze --no-such-flag").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("simulate --strategy nothere").exit_code == 2);
}

TEST_CASE("simulation-phase failures exit 3") {
    const fs::path cfg = write_config("thin.toml", "[sim]\nhorizon = 10\nburn_in = 9\n");
    const RunResult res = run_cli("simulate --strategy it --config " + cfg.string());
    CHECK(res.exit_code == 3);
    CHECK(res.err.find("InsufficientData") != std::string::npos);
}

TEST_CASE("simulate output is byte-identical across runs and thread caps") {
    const fs::path cfg = write_config("sim.toml", kSmallSim);
    const std::string args = "simulate --strategy growthmax --seed 42 --config " + cfg.string();

    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    const RunResult t1 = run_cli(args, "MOGIR_SIM_THREADS=1");
    const RunResult t3 = run_cli(args, "MOGIR_SIM_THREADS=3");
    CHECK(t1.exit_code == 0);
    CHECK(t1.out == a.out);
    CHECK(t3.out == a.out);

    const RunResult dump1 = run_cli(args + " --dump-paths", "MOGIR_SIM_THREADS=1");
    const RunResult dump3 = run_cli(args + " --dump-paths", "MOGIR_SIM_THREADS=4");
    CHECK(dump1.out == dump3.out);
    CHECK(dump1.out.rfind("t,x,pi,y_pot,y,i\n", 0) == 0);
}

TEST_CASE("bad thread cap is a config error") {
    CHECK(run_cli("analyze", "MOGIR_SIM_THREADS=abc").exit_code == 2);
    CHECK(run_cli("analyze", "MOGIR_SIM_THREADS=-2").exit_code == 2);
}

TEST_CASE("dump of a shockless targeting run has constant columns") {
    const fs::path cfg = write_config("flat.toml", R"([params]
sigma_x = 0
sigma_pi = 0
sigma_y = 0
[sim]
horizon = 20
burn_in = 2
n_paths = 1
)");
    const RunResult res =
        run_cli("simulate --strategy it --dump-paths --config " + cfg.string());
    CHECK(res.exit_code == 0);
    std::istringstream lines(res.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "t,x,pi,y_pot,y,i");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.find(",0,0.02,") != std::string::npos);  // x, pi columns pinned
    }
    CHECK(rows == 21);
}

TEST_CASE("compare ranks strict targeting first and honors --strict") {
    const fs::path cfg = write_config("cmp.toml", kSmallSim);
    const RunResult csv = run_cli("compare --format csv --config " + cfg.string());
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("ranking,StrictInflationTargeting,rank,1") != std::string::npos);
    CHECK(csv.out.find("time_inconsistency,,one_step_gap,1.38889") != std::string::npos);
    CHECK(csv.out.find("time_inconsistency,,long_run_gap,1.38889") != std::string::npos);
    // one row per (strategy, statistic) in the long-run targets block
    for (const char* strat : {"PureStabilization", "GrowthMax", "StrictInflationTargeting"})
        for (const char* stat : {"mean_pi", "mean_x", "var_pi"}) {
            const std::string row = std::string("longrun_targets,") + strat + "," + stat + ",";
            CHECK(csv.out.find(row) != std::string::npos);
        }

    const RunResult honest = run_cli("compare --strict --config " + cfg.string());
    CHECK(honest.exit_code == 0);

    const RunResult sabotaged =
        run_cli("compare --strict --inject-discrepancy 0.5 --config " + cfg.string());
    CHECK(sabotaged.exit_code == 4);
    CHECK(sabotaged.out.find("DISCREPANCY") != std::string::npos);
}

TEST_CASE("verify passes honestly and names sabotaged checks") {
    const fs::path cfg = write_config("verify.toml", R"([sim]
horizon = 5100
burn_in = 100
n_paths = 20
seed = 1009
)");
    const RunResult all = run_cli("verify --config " + cfg.string());
    CHECK(all.exit_code == 0);
    CHECK(all.out.find("fixed-point") != std::string::npos);
    CHECK(all.out.find("foc") != std::string::npos);
    CHECK(all.out.find("moments") != std::string::npos);
    CHECK(all.out.find("FAIL") == std::string::npos);

    const RunResult only = run_cli("verify --checks fixed-point --config " + cfg.string());
    CHECK(only.exit_code == 0);
    CHECK(only.out.find("fixed-point") != std::string::npos);
    CHECK(only.out.find("foc") == std::string::npos);
    CHECK(only.out.find("moments") == std::string::npos);

    CHECK(run_cli("verify --checks bogus --config " + cfg.string()).exit_code == 2);

    const RunResult sabotaged =
        run_cli("verify --checks foc --perturb-gamma 0.5 --config " + cfg.string());
    CHECK(sabotaged.exit_code == 5);
    CHECK(sabotaged.err.find("foc") != std::string::npos);
}

TEST_CASE("--out writes the same bytes as stdout") {
    const fs::path out_file = scratch_dir() / "analyze.json";
    const RunResult direct = run_cli("analyze --format json");
    const RunResult to_file = run_cli("analyze --format json --out " + out_file.string());
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.out.empty());
    CHECK(slurp(out_file) == direct.out);
}
