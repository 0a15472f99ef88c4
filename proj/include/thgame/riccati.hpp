#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "thgame/jmatrix.hpp"

namespace thgame {

/// Feedback-gain matrix P with the horizon it was solved for.
/// P(f_terminal) = S holds exactly.
struct RiccatiGain {
    Mat6 P;
    double f_eval;
    double f_terminal;
};

/// Thrown when (omega22 - S omega12) is numerically singular, which signals
/// a conjugate point or an ill-posed horizon.
class singular_gain_error : public std::runtime_error {
  public:
    singular_gain_error(double condition_estimate, double f, double f_f)
        : std::runtime_error(format(condition_estimate, f, f_f)),
          condition_estimate_(condition_estimate) {}

    double condition_estimate() const { return condition_estimate_; }

  private:
    static std::string format(double cond, double f, double f_f) {
        std::ostringstream os;
        os << "singular Riccati coefficient matrix at f=" << f << ", f_f=" << f_f
           << " (condition estimate " << cond << ")";
        return os.str();
    }
    double condition_estimate_;
};

/// Condition-estimate ceiling for the gain solve.
inline constexpr double kGainConditionLimit = 1e12;

namespace detail {

inline Mat6 solve_gain(const Mat6& coeff, const Mat6& rhs, double f, double f_f) {
    Eigen::PartialPivLU<Mat6> lu(coeff);
    const double rc = lu.rcond();
    if (!(rc > 1.0 / kGainConditionLimit))
        throw singular_gain_error(1.0 / rc, f, f_f);
    return lu.solve(rhs);
}

}  // namespace detail

/// Closed-form solution of the game Riccati equation:
/// P(f) = (omega22(f_f,f) - S omega12(f_f,f))^{-1} S omega11(f_f,f).
inline RiccatiGain analytical_gain(const ReferenceOrbit& orbit, const GameWeights& w,
                                   double f, double f_f) {
    if (!(f <= f_f))
        throw std::invalid_argument("analytical_gain requires f <= f_f");
    const Mat6 S = w.terminal_weight();
    if (f == f_f) return {S, f, f_f};
    const Mat6 coeff = omega22(orbit, f_f, f) - S * omega12(orbit, w, f_f, f);
    return {detail::solve_gain(coeff, S * omega11(orbit, f_f, f), f, f_f), f, f_f};
}

/// One-sided (uncontrolled target) variant of analytical_gain.
inline RiccatiGain defense_gain(const ReferenceOrbit& orbit, double r_p, double s_r,
                                double f, double f_f) {
    if (!(f <= f_f))
        throw std::invalid_argument("defense_gain requires f <= f_f");
    Mat6 S = Mat6::Zero();
    S(0, 0) = S(1, 1) = S(2, 2) = s_r;
    if (f == f_f) return {S, f, f_f};
    const Mat6 coeff = omega22(orbit, f_f, f) - S * defense_omega12(orbit, r_p, f_f, f);
    return {detail::solve_gain(coeff, S * omega11(orbit, f_f, f), f, f_f), f, f_f};
}

/// Fixed-step backward RK4 integration of the Riccati equation
/// P' = -A^T P - P A + P B (1/r_p - 1/r_e) B^T P from P(f_f) = S down to f.
/// Reference solver for validating the closed form; also the gain source of
/// the "numerical" strategy. Pass r_e = +inf for the one-sided variant.
inline RiccatiGain numerical_gain_oracle(const ReferenceOrbit& orbit,
                                         const GameWeights& w, double f, double f_f,
                                         int steps) {
    if (steps < 1)
        throw std::invalid_argument("numerical_gain_oracle requires steps >= 1");
    if (!(f <= f_f))
        throw std::invalid_argument("numerical_gain_oracle requires f <= f_f");
    const double coupling = 1.0 / w.r_p - 1.0 / w.r_e;
    Mat6 P = w.terminal_weight();
    const double h = (f - f_f) / steps;  // negative
    double x = f_f;
    const auto rhs = [&](double fv, const Mat6& Pv) -> Mat6 {
        const Mat6 A = th_system_matrix(orbit, fv);
        const Mat63 B = th_input_matrix(orbit, fv);
        const Mat6 quad = Pv * B * (coupling * B.transpose()) * Pv;
        return -A.transpose() * Pv - Pv * A + quad;
    };
    for (int i = 0; i < steps; ++i) {
        const Mat6 k1 = rhs(x, P);
        const Mat6 k2 = rhs(x + 0.5 * h, P + 0.5 * h * k1);
        const Mat6 k3 = rhs(x + 0.5 * h, P + 0.5 * h * k2);
        const Mat6 k4 = rhs(x + h, P + h * k3);
        P += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        x += h;
    }
    if (!P.allFinite())
        throw std::runtime_error(
            "numerical_gain_oracle diverged (step too coarse for the Riccati "
            "flow); increase steps");
    return {P, f, f_f};
}

/// Clamping rules for the time-to-go estimate.
struct TimeToGoPolicy {
    double floor;
    double ceiling;
    double denominator_eps = 1e-9;
};

/// Default policy: floor of 10 integration steps; ceiling of pi/2 for
/// parabolic/hyperbolic orbits (additionally capped so the horizon stays
/// inside the valid domain), pi for elliptic (the gain coefficient matrix
/// drifts toward its condition limit near full-revolution horizons).
inline TimeToGoPolicy default_time_to_go_policy(const ReferenceOrbit& orbit, double h_f,
                                                double f) {
    TimeToGoPolicy policy{10.0 * h_f, std::numbers::pi};
    if (orbit.regime() != Regime::Elliptic) {
        const double domain_cap = orbit.max_true_anomaly() - 1e-3 - f;
        policy.ceiling = std::min(std::numbers::pi / 2.0, domain_cap);
        policy.ceiling = std::max(policy.ceiling, policy.floor);
    }
    return policy;
}

/// Receding-horizon estimate of the remaining anomaly interval:
/// raw = -|pos|^2 / (pos . vel), clamped to [floor, ceiling]. Non-approaching
/// or near-zero closing rates collapse to the floor; result is always > 0.
inline double time_to_go(const Vec6& x, const TimeToGoPolicy& policy) {
    const double num = x.head<3>().squaredNorm();
    const double den = x.head<3>().dot(x.tail<3>());
    double raw = policy.floor;
    if (den < -policy.denominator_eps) raw = -num / den;
    return std::clamp(raw, policy.floor, policy.ceiling);
}

}  // namespace thgame
