#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "thgame/game.hpp"

namespace thgame {

/// Classical fourth-order Runge-Kutta step of y' = deriv(f, y).
template <class Deriv, class State>
State rk4_step(Deriv&& deriv, double f, const State& y, double h) {
    const State k1 = deriv(f, y);
    const State k2 = deriv(f + 0.5 * h, State(y + 0.5 * h * k1));
    const State k3 = deriv(f + 0.5 * h, State(y + 0.5 * h * k2));
    const State k4 = deriv(f + h, State(y + h * k3));
    return y + h * State((k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0);
}

enum class Strategy { ThAnalytical, Numerical, CwBaseline, Defense };

inline const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::ThAnalytical: return "th";
        case Strategy::Numerical: return "numerical";
        case Strategy::CwBaseline: return "cw";
        case Strategy::Defense: return "defense";
    }
    return "?";
}

enum class Termination { Captured, MaxSteps, HorizonEscape };

struct GameConfig {
    ReferenceOrbit orbit;
    GameWeights weights;
    Vec6 pursuer0 = Vec6::Zero();   // transformed coordinates (m, m/rad)
    Vec6 evader0 = Vec6::Zero();
    double f0 = 0.0;
    double h_f = 1e-5;              // integration step (rad)
    double d_c = 1.0;               // capture radius (m)
    Strategy strategy = Strategy::ThAnalytical;
    std::uint64_t seed = 0;
    double disturbance_bound = 0.0;  // m/rad^2, 0 disables
    bool resample_disturbance = false;
    long max_steps = 100000;
    int oracle_steps = 2000;         // backward-RK4 steps of the numerical strategy
    int sample_every = 100;          // trajectory decimation
    int gain_refresh_every = 1;

    void validate() const {
        if (!(h_f > 0.0)) throw std::invalid_argument("GameConfig: h_f must be > 0");
        if (!(d_c > 0.0)) throw std::invalid_argument("GameConfig: d_c must be > 0");
        if (max_steps <= 0) throw std::invalid_argument("GameConfig: max_steps must be > 0");
        if (oracle_steps < 1) throw std::invalid_argument("GameConfig: oracle_steps < 1");
        if (sample_every < 1) throw std::invalid_argument("GameConfig: sample_every < 1");
        if (gain_refresh_every < 1)
            throw std::invalid_argument("GameConfig: gain_refresh_every < 1");
    }
};

struct TrajectorySample {
    double f;
    Vec6 pursuer;
    Vec6 evader;
    Vec6 relative;
    Vec3 u_p;
    Vec3 u_e;
    double distance;
};

struct GameResult {
    bool captured = false;
    Termination termination = Termination::MaxSteps;
    double delta_f = 0.0;
    double final_distance = 0.0;
    double min_distance = 0.0;
    double cost = 0.0;
    long steps = 0;
    Strategy strategy = Strategy::ThAnalytical;
    std::uint64_t seed = 0;
    Disturbance disturbance;
    double wall_seconds = 0.0;
    double gain_eval_seconds = 0.0;
    long gain_evals = 0;
    std::vector<TrajectorySample> samples;
};

/// Receding-horizon game loop: per step, estimate f_f from the relative
/// state, solve P with the selected strategy, apply the feedback pair, and
/// RK4-step both players and the relative state. Capture is checked after
/// each full step. For parabolic/hyperbolic orbits the run additionally
/// terminates, not captured, when the raw time-to-go estimate no longer fits
/// inside the orbit's valid arc (the intercept has become infeasible and
/// past this point low-thrust drift makes the endgame ill-defined).
inline GameResult run_game(const GameConfig& config) {
    config.validate();
    const auto t_start = std::chrono::steady_clock::now();

    const ReferenceOrbit& orbit = config.orbit;
    const GameWeights& w = config.weights;
    const ReferenceOrbit gain_orbit = config.strategy == Strategy::CwBaseline
                                          ? orbit.circular_surrogate()
                                          : orbit;
    const bool evader_controlled = config.strategy != Strategy::Defense;
    const bool elliptic = orbit.regime() == Regime::Elliptic;
    const double f_domain_safe =
        elliptic ? std::numeric_limits<double>::infinity()
                 : orbit.max_true_anomaly() - 1e-3;
    const double h = config.h_f;

    GameResult out;
    out.strategy = config.strategy;
    out.seed = config.seed;

    std::mt19937_64 rng(config.seed);
    Disturbance dist;
    if (config.disturbance_bound > 0.0)
        dist = detail::draw_disturbance(rng, config.disturbance_bound);
    out.disturbance = dist;

    Vec6 Xp = config.pursuer0;
    Vec6 Xe = config.evader0;
    Vec6 x = Xp - Xe;
    double f = config.f0;
    double cost = 0.0;
    double prev_rate = 0.0;
    bool have_prev_rate = false;

    RiccatiGain gain{w.terminal_weight(), f, f};
    bool have_gain = false;

    const auto compute_gain = [&](double fc, double ff) -> RiccatiGain {
        const auto t0 = std::chrono::steady_clock::now();
        RiccatiGain g;
        switch (config.strategy) {
            case Strategy::ThAnalytical:
                g = analytical_gain(orbit, w, fc, ff);
                break;
            case Strategy::Numerical:
                g = numerical_gain_oracle(orbit, w, fc, ff, config.oracle_steps);
                break;
            case Strategy::CwBaseline:
                g = analytical_gain(gain_orbit, w, fc, ff);
                break;
            case Strategy::Defense:
                g = defense_gain(orbit, w.r_p, w.s_r, fc, ff);
                break;
        }
        out.gain_eval_seconds +=
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ++out.gain_evals;
        return g;
    };

    const auto controls_at = [&](double fc, const Vec6& xc) -> std::pair<Vec3, Vec3> {
        auto [u_p, u_e] = control_inputs(gain, xc, gain_orbit, w, fc);
        if (!evader_controlled) u_e.setZero();
        return {u_p, u_e};
    };

    double d = x.head<3>().norm();
    out.min_distance = d;
    long step = 0;
    for (;; ++step) {
        d = x.head<3>().norm();
        out.min_distance = std::min(out.min_distance, d);
        if (d < config.d_c) {
            out.termination = Termination::Captured;
            break;
        }
        if (step >= config.max_steps) {
            out.termination = Termination::MaxSteps;
            break;
        }
        const double num = x.head<3>().squaredNorm();
        const double den = x.head<3>().dot(x.tail<3>());
        const TimeToGoPolicy policy = default_time_to_go_policy(orbit, h, f);
        if (!elliptic &&
            (den >= -policy.denominator_eps || f + (-num / den) > f_domain_safe)) {
            out.termination = Termination::HorizonEscape;
            break;
        }
        if (!have_gain || step % config.gain_refresh_every == 0) {
            gain = compute_gain(f, f + time_to_go(x, policy));
            have_gain = true;
        }
        const auto [u_p, u_e] = controls_at(f, x);
        const double rate = cost_rate(u_p, u_e, w);
        if (have_prev_rate) cost += 0.5 * h * (prev_rate + rate);
        prev_rate = rate;
        have_prev_rate = true;

        if (step % config.sample_every == 0)
            out.samples.push_back({f, Xp, Xe, x, u_p, u_e, d});

        Xp = rk4_step(
            [&](double ff, const Vec6& s) {
                return player_derivative(orbit, ff, s, u_p, dist.pursuer);
            },
            f, Xp, h);
        Xe = rk4_step(
            [&](double ff, const Vec6& s) {
                return player_derivative(orbit, ff, s, u_e, dist.evader);
            },
            f, Xe, h);
        x = rk4_step(
            [&](double ff, const Vec6& s) {
                return relative_derivative(orbit, ff, s, u_p, u_e, dist.pursuer,
                                           dist.evader);
            },
            f, x, h);
        f += h;
        if (config.resample_disturbance && config.disturbance_bound > 0.0)
            dist = detail::draw_disturbance(rng, config.disturbance_bound);
    }

    // close the cost trapezoid and record the final sample
    Vec3 u_p_end = Vec3::Zero(), u_e_end = Vec3::Zero();
    if (have_prev_rate) {
        try {
            const TimeToGoPolicy policy = default_time_to_go_policy(orbit, h, f);
            gain = compute_gain(f, f + time_to_go(x, policy));
            std::tie(u_p_end, u_e_end) = controls_at(f, x);
            cost += 0.5 * h * (prev_rate + cost_rate(u_p_end, u_e_end, w));
        } catch (const singular_gain_error&) {
            cost += 0.5 * h * prev_rate;  // rectangle tail
        }
    }
    out.samples.push_back({f, Xp, Xe, x, u_p_end, u_e_end, d});

    out.captured = out.termination == Termination::Captured;
    if (out.captured) cost += terminal_cost(x, w);
    out.cost = cost;
    out.delta_f = f - config.f0;
    out.final_distance = d;
    out.steps = step;
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return out;
}

/// One-sided pursuit of a coasting target (evader control disabled, running
/// cost keeps only the pursuer term).
inline GameResult run_defense(GameConfig config) {
    config.strategy = Strategy::Defense;
    return run_game(config);
}

struct StrategyRun {
    Strategy strategy;
    bool ok = false;
    std::string error;
    GameResult result;
};

struct StrategyComparison {
    std::vector<StrategyRun> runs;
    /// Pairwise max |relative position difference| over common samples [m];
    /// -1 where either run failed.
    Eigen::MatrixXd max_position_divergence;
    /// gain_time_ratio(i,j) = per-evaluation gain time of i over that of j.
    Eigen::MatrixXd gain_time_ratio;
};

/// Runs each strategy on an identical configuration (same seed) and reports
/// per-strategy metrics plus pairwise trajectory divergence and gain-cost
/// ratios. Per-strategy failures are recorded and do not abort the rest.
inline StrategyComparison compare_strategies(const GameConfig& config,
                                             const std::vector<Strategy>& strategies) {
    if (strategies.size() < 2)
        throw std::invalid_argument("compare_strategies needs >= 2 strategies");
    StrategyComparison cmp;
    for (Strategy s : strategies) {
        StrategyRun run;
        run.strategy = s;
        GameConfig c = config;
        c.strategy = s;
        try {
            run.result = run_game(c);
            run.ok = true;
        } catch (const std::exception& ex) {
            run.error = ex.what();
        }
        cmp.runs.push_back(std::move(run));
    }
    const auto n = static_cast<Eigen::Index>(strategies.size());
    cmp.max_position_divergence = Eigen::MatrixXd::Constant(n, n, -1.0);
    cmp.gain_time_ratio = Eigen::MatrixXd::Constant(n, n, -1.0);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto& a = cmp.runs[static_cast<std::size_t>(i)];
            const auto& b = cmp.runs[static_cast<std::size_t>(j)];
            if (!a.ok || !b.ok) continue;
            const std::size_t m =
                std::min(a.result.samples.size(), b.result.samples.size());
            double worst = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                worst = std::max(worst, (a.result.samples[k].relative.head<3>() -
                                         b.result.samples[k].relative.head<3>())
                                            .norm());
            }
            cmp.max_position_divergence(i, j) = worst;
            if (a.result.gain_evals > 0 && b.result.gain_evals > 0 &&
                b.result.gain_eval_seconds > 0.0) {
                const double ta = a.result.gain_eval_seconds / a.result.gain_evals;
                const double tb = b.result.gain_eval_seconds / b.result.gain_evals;
                cmp.gain_time_ratio(i, j) = ta / tb;
            }
        }
    }
    return cmp;
}

}  // namespace thgame
