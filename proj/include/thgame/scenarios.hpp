#pragma once

#include <stdexcept>

#include "thgame/sim.hpp"

namespace thgame {

/// Earth gravitational constant used by the built-in scenarios [m^3/s^2].
inline constexpr double kEarthMu = 3.98603e14;
/// Capture radius of the built-in scenarios [m].
inline constexpr double kDefaultCaptureRadius = 1.0;

enum class ScenarioId { I, II };

/// Built-in benchmark configurations. Scenario I and II fix the orbit size,
/// weights and initial states; the eccentricity selects the regime
/// (0.2 / 1.0 / 1.5 in the reference tables).
inline GameConfig scenario_preset(ScenarioId id, double e) {
    const double p = id == ScenarioId::I ? 4.2241e7 : 1.8339e7;
    const GameWeights w = id == ScenarioId::I ? GameWeights{0.1, 1e6, 1.1e6}
                                              : GameWeights{1.0, 1e6, 1.5e6};
    GameConfig config{ReferenceOrbit{p, e, kEarthMu}, w};
    if (id == ScenarioId::I)
        config.pursuer0 << 1500.0, 500.0, 0.0, -10000.0, 0.0, 1000.0;
    else
        config.pursuer0 << 1500.0, 0.0, -2500.0, -5000.0, 0.0, 10000.0;
    config.evader0.setZero();
    config.f0 = 0.0;
    config.h_f = 1e-5;
    config.d_c = kDefaultCaptureRadius;
    return config;
}

inline ScenarioId parse_scenario_id(const std::string& s) {
    if (s == "I" || s == "i" || s == "1") return ScenarioId::I;
    if (s == "II" || s == "ii" || s == "2") return ScenarioId::II;
    throw std::invalid_argument("unknown scenario '" + s + "' (expected I or II)");
}

}  // namespace thgame
