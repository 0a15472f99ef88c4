// Command-line front end: scenario presets, config files, trajectory/metrics
// output, and the built-in benchmark tables.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <thgame/config_io.hpp>
#include <thgame/thgame.hpp>

namespace fs = std::filesystem;
using namespace thgame;

namespace {

constexpr int kExitCaptured = 0;
constexpr int kExitError = 1;
constexpr int kExitNoCapture = 2;

struct RunOptions {
    std::string scenario = "I";
    double e = 0.2;
    std::string config_path;
    std::string strategy = "th";
    std::optional<double> step;
    std::optional<double> capture_radius;
    std::optional<std::uint64_t> seed;
    std::optional<double> disturbance_bound;
    std::optional<long> max_steps;
    std::optional<int> oracle_steps;
    std::optional<int> sample_every;
    std::string out_dir;
    bool strict_eccentricity = false;
};

std::string default_out_dir() {
    if (const char* env = std::getenv("THGAME_OUT_DIR"); env && *env) return env;
    return ".";
}

void add_common_options(CLI::App* cmd, RunOptions& opt, bool with_strategy) {
    cmd->add_option("--scenario", opt.scenario, "built-in scenario (I or II)")
        ->check(CLI::IsMember({"I", "II", "i", "ii", "1", "2"}));
    cmd->add_option("--e", opt.e, "reference-orbit eccentricity");
    cmd->add_option("--config", opt.config_path,
                    "run configuration file (overrides --scenario/--e)");
    if (with_strategy)
        cmd->add_option("--strategy", opt.strategy, "th | numerical | cw | defense");
    cmd->add_option("--step", opt.step, "integration step h_f (rad)");
    cmd->add_option("--capture-radius", opt.capture_radius, "capture radius (m)");
    cmd->add_option("--seed", opt.seed, "disturbance seed");
    cmd->add_option("--disturbance-bound", opt.disturbance_bound,
                    "uniform disturbance bound (m/rad^2), 0 disables");
    cmd->add_option("--max-steps", opt.max_steps, "step budget before giving up");
    cmd->add_option("--oracle-steps", opt.oracle_steps,
                    "backward-RK4 steps per refresh of the numerical strategy");
    cmd->add_option("--sample-every", opt.sample_every, "trajectory decimation");
    cmd->add_option("--out", opt.out_dir,
                    "output directory (default $THGAME_OUT_DIR or '.')");
    cmd->add_flag("--strict-eccentricity", opt.strict_eccentricity,
                  "reject eccentricities in the advisory bands (0.8,1) and (1,1.2)");
}

GameConfig build_config(const RunOptions& opt) {
    GameConfig config = opt.config_path.empty()
                            ? scenario_preset(parse_scenario_id(opt.scenario), opt.e)
                            : parse_config_file(opt.config_path);
    if (opt.config_path.empty()) config.strategy = parse_strategy(opt.strategy);
    if (opt.step) config.h_f = *opt.step;
    if (opt.capture_radius) config.d_c = *opt.capture_radius;
    if (opt.seed) config.seed = *opt.seed;
    if (opt.disturbance_bound) config.disturbance_bound = *opt.disturbance_bound;
    if (opt.max_steps) config.max_steps = *opt.max_steps;
    if (opt.oracle_steps) config.oracle_steps = *opt.oracle_steps;
    if (opt.sample_every) config.sample_every = *opt.sample_every;
    config.validate();

    if (in_eccentricity_advisory_band(config.orbit.e())) {
        if (opt.strict_eccentricity)
            throw std::runtime_error(
                "eccentricity " + std::to_string(config.orbit.e()) +
                " lies in the advisory band; the closed forms lose accuracy near "
                "e = 1 (rerun without --strict-eccentricity to force)");
        std::cerr << "warning: eccentricity " << config.orbit.e()
                  << " is in the advisory band (0.8,1)/(1,1.2); accuracy of the "
                     "closed forms degrades near e = 1\n";
    }
    return config;
}

std::string run_tag(const RunOptions& opt, const GameConfig& config) {
    if (!opt.config_path.empty()) return fs::path(opt.config_path).stem().string();
    std::ostringstream os;
    os << "sc" << opt.scenario << "_e" << config.orbit.e() << "_"
       << strategy_name(config.strategy) << "_seed" << config.seed;
    return os.str();
}

void write_outputs(const std::string& out_dir, const std::string& tag,
                   const GameConfig& config, const GameResult& result) {
    fs::create_directories(out_dir);
    const fs::path base = fs::path(out_dir) / tag;
    {
        std::ofstream csv(base.string() + "_trajectory.csv");
        write_trajectory_csv(csv, result);
    }
    {
        std::ofstream js(base.string() + "_metrics.json");
        js << metrics_json(result).dump(2) << "\n";
    }
    {
        std::ofstream cfg(base.string() + "_config.txt");
        cfg << serialize_config(config);
    }
}

void print_metrics(const GameResult& r) {
    std::printf("strategy=%s captured=%s delta_f=%.5f final_distance=%.4f m "
                "min_distance=%.4f m cost=%.4f steps=%ld wall=%.2f s\n",
                strategy_name(r.strategy), r.captured ? "yes" : "no", r.delta_f,
                r.final_distance, r.min_distance, r.cost, r.steps, r.wall_seconds);
}

int cmd_run(const RunOptions& opt, bool force_defense) {
    GameConfig config = build_config(opt);
    if (force_defense) config.strategy = Strategy::Defense;
    const GameResult result = run_game(config);
    print_metrics(result);
    const std::string out = opt.out_dir.empty() ? default_out_dir() : opt.out_dir;
    write_outputs(out, run_tag(opt, config), config, result);
    return result.captured ? kExitCaptured : kExitNoCapture;
}

struct Table4Row {
    const char* label;
    ScenarioId scenario;
    double e;
    double delta_f_ref;
    double cost_ref;
};

constexpr Table4Row kTable4[] = {
    {"Scenario I,  elliptic  ", ScenarioId::I, 0.2, 0.17615, 0.2282},
    {"Scenario I,  parabolic ", ScenarioId::I, 1.0, 0.17620, 3.9560},
    {"Scenario I,  hyperbolic", ScenarioId::I, 1.5, 0.17623, 14.9894},
    {"Scenario II, elliptic  ", ScenarioId::II, 0.2, 0.26249, 1.2439},
    {"Scenario II, parabolic ", ScenarioId::II, 1.0, 0.26254, 15.7472},
    {"Scenario II, hyperbolic", ScenarioId::II, 1.5, 0.26255, 57.2428},
};

int cmd_table4(double df_tol, double cost_rel_tol, bool with_numerical,
               int oracle_steps) {
    std::vector<std::future<GameResult>> jobs;
    for (const auto& row : kTable4) {
        jobs.push_back(std::async(std::launch::async, [&row] {
            return run_game(scenario_preset(row.scenario, row.e));
        }));
    }
    std::vector<std::future<GameResult>> numerical_jobs;
    if (with_numerical) {
        for (const auto& row : kTable4) {
            numerical_jobs.push_back(
                std::async(std::launch::async, [&row, oracle_steps] {
                    GameConfig cfg = scenario_preset(row.scenario, row.e);
                    cfg.strategy = Strategy::Numerical;
                    cfg.oracle_steps = oracle_steps;
                    return run_game(cfg);
                }));
        }
    }
    bool all_ok = true;
    std::printf("analytical strategy, six benchmark cases "
                "(tolerances: |d(delta_f)| <= %g rad, |dJ| <= %g%%)\n",
                df_tol, 100.0 * cost_rel_tol);
    std::printf("%-26s %-9s %-9s %-9s %-10s %-10s %-8s %-8s %s\n", "case", "captured",
                "delta_f", "ref", "J", "ref", "dJ%%", "wall_s", "status");
    for (std::size_t i = 0; i < std::size(kTable4); ++i) {
        const auto& row = kTable4[i];
        const GameResult r = jobs[i].get();
        const bool ok = r.captured && std::abs(r.delta_f - row.delta_f_ref) <= df_tol &&
                        std::abs(r.cost / row.cost_ref - 1.0) <= cost_rel_tol;
        all_ok = all_ok && ok;
        std::printf("%-26s %-9s %-9.5f %-9.5f %-10.4f %-10.4f %-+8.2f %-8.2f %s\n",
                    row.label, r.captured ? "yes" : "NO", r.delta_f, row.delta_f_ref,
                    r.cost, row.cost_ref, 100.0 * (r.cost / row.cost_ref - 1.0),
                    r.wall_seconds, ok ? "PASS" : "FAIL");
    }
    if (with_numerical) {
        std::printf("\nnumerical strategy (desk-scale oracle, %d backward steps)\n",
                    oracle_steps);
        for (std::size_t i = 0; i < std::size(kTable4); ++i) {
            const GameResult r = numerical_jobs[i].get();
            std::printf("%-26s %-9s %-9.5f %-20.4f %-8.2f\n", kTable4[i].label,
                        r.captured ? "yes" : "NO", r.delta_f, r.cost, r.wall_seconds);
        }
    }
    return all_ok ? 0 : kExitNoCapture;
}

struct Table5Row {
    const char* label;
    ScenarioId scenario;
    double e;
    bool cw_captures;
    double cw_delta_f;   // when capturing
    double cw_cost;      // when capturing
    double cw_min_dist;  // when failing
};

constexpr Table5Row kTable5[] = {
    {"Scenario I,  elliptic  ", ScenarioId::I, 0.2, true, 0.18914, 0.3442, 0.0},
    {"Scenario I,  parabolic ", ScenarioId::I, 1.0, false, 0.0, 0.0, 589.9189},
    {"Scenario I,  hyperbolic", ScenarioId::I, 1.5, false, 0.0, 0.0, 656.1038},
    {"Scenario II, elliptic  ", ScenarioId::II, 0.2, true, 0.26270, 1.7730, 0.0},
    {"Scenario II, parabolic ", ScenarioId::II, 1.0, false, 0.0, 0.0, 212.6866},
    {"Scenario II, hyperbolic", ScenarioId::II, 1.5, false, 0.0, 0.0, 329.2829},
};

int cmd_table5() {
    std::vector<std::future<GameResult>> th_jobs, cw_jobs;
    for (const auto& row : kTable5) {
        th_jobs.push_back(std::async(std::launch::async, [&row] {
            return run_game(scenario_preset(row.scenario, row.e));
        }));
        cw_jobs.push_back(std::async(std::launch::async, [&row] {
            GameConfig cfg = scenario_preset(row.scenario, row.e);
            cfg.strategy = Strategy::CwBaseline;
            return run_game(cfg);
        }));
    }
    bool all_ok = true;
    std::printf("%-26s %-12s %-24s %s\n", "case", "th", "cw", "status");
    double prev_min[2] = {0.0, 0.0};  // per scenario: CW miss grows with e
    for (std::size_t i = 0; i < std::size(kTable5); ++i) {
        const auto& row = kTable5[i];
        const GameResult th = th_jobs[i].get();
        const GameResult cw = cw_jobs[i].get();
        bool ok = th.captured;
        std::string cw_desc;
        if (row.cw_captures) {
            ok = ok && cw.captured &&
                 std::abs(cw.delta_f - row.cw_delta_f) <= 0.002 &&
                 std::abs(cw.cost / row.cw_cost - 1.0) <= 0.05;
            cw_desc = "captured, delta_f=" + std::to_string(cw.delta_f);
        } else {
            ok = ok && !cw.captured &&
                 std::abs(cw.min_distance / row.cw_min_dist - 1.0) <= 0.10;
            cw_desc = "miss, min=" + std::to_string(cw.min_distance) + " m";
            const int sc = row.scenario == ScenarioId::I ? 0 : 1;
            if (prev_min[sc] > 0.0) ok = ok && cw.min_distance > prev_min[sc];
            prev_min[sc] = cw.min_distance;
        }
        all_ok = all_ok && ok;
        std::printf("%-26s %-12s %-24s %s\n", row.label,
                    th.captured ? "captured" : "MISS", cw_desc.c_str(),
                    ok ? "PASS" : "FAIL");
    }
    std::printf("expected pattern: cw captures the two elliptic cases only; "
                "th captures all six; cw miss distance grows with e\n");
    return all_ok ? 0 : kExitNoCapture;
}

int cmd_compare(const RunOptions& opt, const std::string& strategies_csv) {
    GameConfig config = build_config(opt);
    std::vector<Strategy> strategies;
    std::stringstream ss(strategies_csv);
    std::string item;
    while (std::getline(ss, item, ',')) strategies.push_back(parse_strategy(item));
    const StrategyComparison cmp = compare_strategies(config, strategies);
    bool any_failed = false;
    for (const auto& run : cmp.runs) {
        if (!run.ok) {
            std::printf("%-10s ERROR: %s\n", strategy_name(run.strategy),
                        run.error.c_str());
            any_failed = true;
            continue;
        }
        print_metrics(run.result);
    }
    for (std::size_t i = 0; i < cmp.runs.size(); ++i)
        for (std::size_t j = i + 1; j < cmp.runs.size(); ++j) {
            const auto a = static_cast<Eigen::Index>(i);
            const auto b = static_cast<Eigen::Index>(j);
            if (cmp.max_position_divergence(a, b) >= 0.0)
                std::printf("max relative-position divergence %s vs %s: %.6g m\n",
                            strategy_name(cmp.runs[i].strategy),
                            strategy_name(cmp.runs[j].strategy),
                            cmp.max_position_divergence(a, b));
            if (cmp.gain_time_ratio(b, a) > 0.0)
                std::printf("gain evaluation time ratio %s / %s: %.1fx\n",
                            strategy_name(cmp.runs[j].strategy),
                            strategy_name(cmp.runs[i].strategy),
                            cmp.gain_time_ratio(b, a));
        }
    return any_failed ? kExitError : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "thgame: linear-quadratic pursuit-evasion games in elliptic, parabolic "
        "and hyperbolic reference orbits"};
    app.require_subcommand(1);

    RunOptions run_opt;
    auto* run_cmd =
        app.add_subcommand("run", "run a single pursuit-evasion game");
    add_common_options(run_cmd, run_opt, true);

    RunOptions defense_opt;
    auto* defense_cmd = app.add_subcommand(
        "defense", "pursue a coasting (uncontrolled) target");
    add_common_options(defense_cmd, defense_opt, false);

    double df_tol = 0.002, cost_tol = 0.05;
    bool with_numerical = false;
    int oracle_steps = 2000;
    auto* t4_cmd = app.add_subcommand(
        "table4", "benchmark: analytical strategy on all six scenario/regime cases");
    t4_cmd->add_option("--df-tol", df_tol, "game-length tolerance (rad)");
    t4_cmd->add_option("--cost-tol", cost_tol, "relative cost tolerance");
    t4_cmd->add_flag("--with-numerical", with_numerical,
                     "also run the numerical strategy at desk-scale oracle depth");
    t4_cmd->add_option("--oracle-steps", oracle_steps,
                       "oracle depth for --with-numerical");

    auto* t5_cmd = app.add_subcommand(
        "table5", "benchmark: analytical (th) vs circular-gain (cw) strategies");
    (void)t5_cmd;

    RunOptions cmp_opt;
    std::string strategies_csv = "th,numerical";
    auto* cmp_cmd = app.add_subcommand(
        "compare", "run several strategies on one configuration and compare");
    add_common_options(cmp_cmd, cmp_opt, false);
    cmp_cmd->add_option("--strategies", strategies_csv,
                        "comma-separated list, e.g. th,numerical,cw");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return cmd_run(run_opt, false);
        if (defense_cmd->parsed()) return cmd_run(defense_opt, true);
        if (t4_cmd->parsed())
            return cmd_table4(df_tol, cost_tol, with_numerical, oracle_steps);
        if (t5_cmd->parsed()) return cmd_table5();
        if (cmp_cmd->parsed()) return cmd_compare(cmp_opt, strategies_csv);
    } catch (const config_error& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return kExitError;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
