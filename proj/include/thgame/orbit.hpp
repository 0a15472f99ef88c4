#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace thgame {

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat63 = Eigen::Matrix<double, 6, 3>;

/// Orbits with |e - 1| below this tolerance are treated as parabolic.
inline constexpr double kParabolicTol = 1e-9;

/// Safety margin (rad) kept from the edge of the parabolic/hyperbolic
/// true-anomaly domain, where tan(f/2) and atanh arguments blow up.
inline constexpr double kDomainMargin = 1e-6;

enum class Regime { Elliptic, Parabolic, Hyperbolic };

inline Regime classify_regime(double e) {
    if (std::abs(e - 1.0) <= kParabolicTol) return Regime::Parabolic;
    return e < 1.0 ? Regime::Elliptic : Regime::Hyperbolic;
}

/// rho(f) = 1 + e cos f, the normalized orbital radius denominator.
inline double rho(double e, double f) { return 1.0 + e * std::cos(f); }

/// Keplerian reference orbit described by semilatus rectum p [m],
/// eccentricity e and gravitational parameter mu [m^3/s^2].
class ReferenceOrbit {
  public:
    ReferenceOrbit(double p, double e, double mu) : p_(p), e_(e), mu_(mu) {
        if (!(p > 0.0)) throw std::invalid_argument("ReferenceOrbit: p must be > 0");
        if (!(mu > 0.0)) throw std::invalid_argument("ReferenceOrbit: mu must be > 0");
        if (!(e >= 0.0)) throw std::invalid_argument("ReferenceOrbit: e must be >= 0");
    }

    double p() const { return p_; }
    double e() const { return e_; }
    double mu() const { return mu_; }

    /// n = sqrt(mu / p^3) [1/s].
    double n() const { return std::sqrt(mu_ / (p_ * p_ * p_)); }
    /// beta = 1/n^2 [s^2].
    double beta() const { return 1.0 / (n() * n()); }

    Regime regime() const { return classify_regime(e_); }

    /// Largest |f| for which the dynamics are defined (inf for elliptic).
    double max_true_anomaly() const {
        switch (regime()) {
            case Regime::Elliptic: return std::numeric_limits<double>::infinity();
            case Regime::Parabolic: return std::numbers::pi;
            case Regime::Hyperbolic: return std::acos(-1.0 / e_);
        }
        return 0.0;  // unreachable
    }

    bool valid_f(double f) const {
        return std::abs(f) < max_true_anomaly() - kDomainMargin;
    }

    void require_valid_f(double f) const {
        if (!valid_f(f))
            throw std::domain_error("true anomaly outside the orbit's valid domain");
    }

    /// Same orbit geometry with e forced to zero (circular surrogate).
    ReferenceOrbit circular_surrogate() const { return {p_, 0.0, mu_}; }

  private:
    double p_, e_, mu_;
};

/// Advisory eccentricity bands where 1/(1-e^2)^k factors degrade accuracy.
/// The closed forms remain evaluable; callers may warn or reject.
inline bool in_eccentricity_advisory_band(double e) {
    if (classify_regime(e) == Regime::Parabolic) return false;
    return (e > 0.8 && e < 1.0) || (e > 1.0 && e < 1.2);
}

/// Eccentric anomaly E(f) for e < 1, branch-matched so that |f - E| < 2*pi
/// and E is monotone/continuous across revolutions.
inline double true_to_eccentric(double e, double f) {
    if (!(e >= 0.0 && e < 1.0))
        throw std::domain_error("true_to_eccentric requires 0 <= e < 1");
    const double r = rho(e, f);
    const double principal =
        std::atan2(std::sqrt(1.0 - e * e) * std::sin(f) / r, (std::cos(f) + e) / r);
    return principal + f - std::atan2(std::sin(f), std::cos(f));
}

/// Hyperbolic anomaly H(f) for e > 1; requires |f| < acos(-1/e).
inline double true_to_hyperbolic(double e, double f) {
    if (!(e > 1.0)) throw std::domain_error("true_to_hyperbolic requires e > 1");
    if (!(std::abs(f) < std::acos(-1.0 / e) - kDomainMargin))
        throw std::domain_error("true anomaly beyond the hyperbolic asymptote");
    return std::atanh(std::sqrt(e * e - 1.0) * std::sin(f) / (e + std::cos(f)));
}

/// L(f) = integral of rho^-2 df = n*t, for elliptic and hyperbolic orbits.
inline double l_function(const ReferenceOrbit& orbit, double f) {
    const double e = orbit.e();
    switch (orbit.regime()) {
        case Regime::Elliptic: {
            const double E = true_to_eccentric(e, f);
            return (E - e * std::sin(E)) / std::pow(1.0 - e * e, 1.5);
        }
        case Regime::Hyperbolic: {
            const double H = true_to_hyperbolic(e, f);
            return (e * std::sinh(H) - H) / std::pow(e * e - 1.0, 1.5);
        }
        case Regime::Parabolic:
            throw std::domain_error("l_function is undefined for parabolic orbits");
    }
    return 0.0;  // unreachable
}

/// C(f) for the parabolic regime; antiderivative of cos(f)/rho^3 at e = 1.
inline double c_function(double f) {
    if (!(std::abs(f) < std::numbers::pi - kDomainMargin))
        throw std::domain_error("c_function requires |f| < pi");
    const double t = std::tan(0.5 * f);
    const double t2 = t * t;
    return t * (0.25 - 0.05 * t2 * t2);
}

/// Physical LVLH state (pos [m], time-derivative vel [m/s]) -> transformed
/// state (rho-scaled pos [m], true-anomaly-derivative vel [m/rad]).
inline Vec6 to_tilde(const ReferenceOrbit& orbit, double f, const Vec6& phys) {
    const double e = orbit.e();
    const double r = rho(e, f);
    const double n = orbit.n();
    Vec6 out;
    out.head<3>() = r * phys.head<3>();
    // x~' = rho' x + rho x',   x' = xdot/(n rho^2),   rho' = -e sin f
    out.tail<3>() = -e * std::sin(f) * phys.head<3>() + phys.tail<3>() / (n * r);
    return out;
}

/// Inverse of to_tilde.
inline Vec6 from_tilde(const ReferenceOrbit& orbit, double f, const Vec6& tilde) {
    const double e = orbit.e();
    const double r = rho(e, f);
    const double n = orbit.n();
    Vec6 out;
    out.head<3>() = tilde.head<3>() / r;
    out.tail<3>() = n * r * tilde.tail<3>() + n * e * std::sin(f) * tilde.head<3>();
    return out;
}

}  // namespace thgame
