#pragma once

#include <cmath>

#include "thgame/orbit.hpp"

namespace thgame {

/// Basis solutions of the homogeneous in-plane TH equation and their
/// antiderivatives. s_* denote running integrals over f (S(.) terms).
struct PhiBasis {
    double phi1, phi2, phi3;
    double dphi1, dphi2, dphi3;
    double s_phi1, s_phi2, s_2phi3p1;
};

inline PhiBasis phi_basis(const ReferenceOrbit& orbit, double f) {
    orbit.require_valid_f(f);
    const double e = orbit.e();
    const double r = rho(e, f);
    const double sf = std::sin(f);
    const double cf = std::cos(f);

    PhiBasis b;
    b.phi1 = r * sf;
    b.dphi1 = r * cf - e * sf * sf;
    b.s_phi1 = -cf - 0.5 * e * cf * cf;

    if (orbit.regime() == Regime::Parabolic) {
        const double C = c_function(f);
        b.phi2 = 2.0 * b.phi1 * C - cf / r;
        b.phi3 = -2.0 * b.phi1 * C - cf * cf / r - cf * cf;
        b.dphi2 = 2.0 * b.dphi1 * C + sf * cf / (r * r) + sf / r;
        b.s_phi2 = -r * r * C;
        b.s_2phi3p1 = 2.0 * (r * r * C - sf) - sf * cf;
    } else {
        const double om = 1.0 - e * e;  // negative for hyperbolic
        const double L = l_function(orbit, f);
        const double D = sf * (2.0 + e * cf) / (r * r);
        const double K = D - 3.0 * e * L;
        b.phi2 = e * b.phi1 * K / om - cf / r;
        b.phi3 = -b.phi1 * K / om - cf * cf / r - cf * cf;
        b.dphi2 = e * b.dphi1 * K / om + e * sf * cf / (r * r) + sf / r;
        b.s_phi2 = -r * r * K / (2.0 * om);
        b.s_2phi3p1 = e * sf * (2.0 + e * cf) / om - 3.0 * r * r * L / om;
    }
    b.dphi3 = 2.0 * (b.dphi1 * b.s_phi2 - b.dphi2 * b.s_phi1);
    return b;
}

/// Fundamental matrix of the homogeneous TH system; columns are solutions,
/// rows ordered [x~, y~, z~, x~', y~', z~'].
inline Mat6 phi(const ReferenceOrbit& orbit, double f) {
    const PhiBasis b = phi_basis(orbit, f);
    const double sf = std::sin(f);
    const double cf = std::cos(f);
    Mat6 m;
    m << b.phi1, b.phi2, b.phi3, 0, 0, 0,
        -2.0 * b.s_phi1, -2.0 * b.s_phi2, -b.s_2phi3p1, 1, 0, 0,
        0, 0, 0, 0, cf, sf,
        b.dphi1, b.dphi2, b.dphi3, 0, 0, 0,
        -2.0 * b.phi1, -2.0 * b.phi2, -2.0 * b.phi3 - 1.0, 0, 0, 0,
        0, 0, 0, 0, -sf, cf;
    return m;
}

/// Closed-form inverse of phi(f); never computed numerically.
inline Mat6 phi_inverse(const ReferenceOrbit& orbit, double f) {
    const PhiBasis b = phi_basis(orbit, f);
    const double sf = std::sin(f);
    const double cf = std::cos(f);
    Mat6 m;
    m << 4.0 * b.s_phi2 + b.dphi2, 0, 0, -b.phi2, 2.0 * b.s_phi2, 0,
        -4.0 * b.s_phi1 - b.dphi1, 0, 0, b.phi1, -2.0 * b.s_phi1, 0,
        -2.0, 0, 0, 0, -1.0, 0,
        -2.0 * b.s_2phi3p1 - b.dphi3, 1, 0, b.phi3, -b.s_2phi3p1, 0,
        0, 0, cf, 0, 0, -sf,
        0, 0, sf, 0, 0, cf;
    return m;
}

/// Homogeneous state transition matrix from f1 to f2.
inline Mat6 omega11(const ReferenceOrbit& orbit, double f2, double f1) {
    return phi(orbit, f2) * phi_inverse(orbit, f1);
}

/// Costate (adjoint) transition matrix: omega11^{-T}.
inline Mat6 omega22(const ReferenceOrbit& orbit, double f2, double f1) {
    return phi_inverse(orbit, f2).transpose() * phi(orbit, f1).transpose();
}

/// System matrix A(f) of x~' = A x~ + B u.
inline Mat6 th_system_matrix(const ReferenceOrbit& orbit, double f) {
    const double r = rho(orbit.e(), f);
    Mat6 a = Mat6::Zero();
    a(0, 3) = a(1, 4) = a(2, 5) = 1.0;
    a(3, 0) = 3.0 / r;
    a(3, 4) = 2.0;
    a(4, 3) = -2.0;
    a(5, 2) = -1.0;
    return a;
}

/// Input matrix B(f) = (beta/rho^3) [O; I] mapping accelerations [m/s^2]
/// into true-anomaly-domain state rates.
inline Mat63 th_input_matrix(const ReferenceOrbit& orbit, double f) {
    const double r = rho(orbit.e(), f);
    const double scale = orbit.beta() / (r * r * r);
    Mat63 b = Mat63::Zero();
    b.block<3, 3>(3, 0) = scale * Eigen::Matrix3d::Identity();
    return b;
}

}  // namespace thgame
