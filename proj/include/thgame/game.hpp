#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "thgame/riccati.hpp"

namespace thgame {

/// Optimal feedback pair from the costate lambda = P x~:
/// u = -(1/r) B^T lambda = -(beta/(r rho^3)) lambda_vel per player.
/// The orbit argument selects the input map B of the strategy's own model:
/// the true orbit for the TH strategy, the circular surrogate for the
/// CW baseline (a CW controller is internally consistent; its model error
/// shows up only against the true dynamics).
inline std::pair<Vec3, Vec3> control_inputs(const RiccatiGain& gain, const Vec6& x,
                                            const ReferenceOrbit& orbit,
                                            const GameWeights& w, double f) {
    const double r = rho(orbit.e(), f);
    const double bscale = orbit.beta() / (r * r * r);
    const Vec3 bt_lambda = bscale * (gain.P * x).tail<3>();
    return {Vec3(-bt_lambda / w.r_p), Vec3(-bt_lambda / w.r_e)};
}

/// Relative dynamics x~' = A x~ + B u_p - B u_e + d_p - d_e, disturbances
/// acting on the velocity slots [m/rad^2].
inline Vec6 relative_derivative(const ReferenceOrbit& orbit, double f, const Vec6& x,
                                const Vec3& u_p, const Vec3& u_e, const Vec3& d_p,
                                const Vec3& d_e) {
    const double r = rho(orbit.e(), f);
    const double bscale = orbit.beta() / (r * r * r);
    Vec6 dx;
    dx.head<3>() = x.tail<3>();
    dx(3) = 3.0 / r * x(0) + 2.0 * x(4);
    dx(4) = -2.0 * x(3);
    dx(5) = -x(2);
    dx.tail<3>() += bscale * (u_p - u_e) + d_p - d_e;
    return dx;
}

/// Single-player controlled TH dynamics (absolute trajectory logging).
inline Vec6 player_derivative(const ReferenceOrbit& orbit, double f, const Vec6& X,
                              const Vec3& u, const Vec3& d) {
    const double r = rho(orbit.e(), f);
    const double bscale = orbit.beta() / (r * r * r);
    Vec6 dX;
    dX.head<3>() = X.tail<3>();
    dX(3) = 3.0 / r * X(0) + 2.0 * X(4);
    dX(4) = -2.0 * X(3);
    dX(5) = -X(2);
    dX.tail<3>() += bscale * u + d;
    return dX;
}

/// Running cost integrand: (r_p |u_p|^2 - r_e |u_e|^2) / 2, per rad.
inline double cost_rate(const Vec3& u_p, const Vec3& u_e, const GameWeights& w) {
    return 0.5 * (w.r_p * u_p.squaredNorm() - w.r_e * u_e.squaredNorm());
}

/// Terminal cost s_r |pos|^2 / 2; insensitive to velocity.
inline double terminal_cost(const Vec6& x_f, const GameWeights& w) {
    return 0.5 * w.s_r * x_f.head<3>().squaredNorm();
}

/// Baseline gain: the analytical solution evaluated on the circular (e = 0)
/// surrogate sharing p and mu, while the truth dynamics keep the real orbit.
inline RiccatiGain cw_gain(const ReferenceOrbit& orbit, const GameWeights& w, double f,
                           double f_f) {
    return analytical_gain(orbit.circular_surrogate(), w, f, f_f);
}

/// Constant per-run orbital disturbance, per player [m/rad^2].
struct Disturbance {
    Vec3 pursuer = Vec3::Zero();
    Vec3 evader = Vec3::Zero();
};

namespace detail {

inline double uniform_symmetric(std::mt19937_64& gen, double bound) {
    // top 53 bits -> [0,1); portable across standard libraries
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return bound * (2.0 * u - 1.0);
}

inline Disturbance draw_disturbance(std::mt19937_64& gen, double bound) {
    Disturbance d;
    for (int i = 0; i < 3; ++i) d.pursuer(i) = uniform_symmetric(gen, bound);
    for (int i = 0; i < 3; ++i) d.evader(i) = uniform_symmetric(gen, bound);
    return d;
}

}  // namespace detail

/// Seeded uniform draw of both players' disturbances from [-bound, bound].
inline Disturbance make_disturbance(std::uint64_t seed, double bound) {
    if (!(bound >= 0.0)) throw std::invalid_argument("make_disturbance: bound < 0");
    if (bound == 0.0) return {};
    std::mt19937_64 gen(seed);
    return detail::draw_disturbance(gen, bound);
}

}  // namespace thgame
