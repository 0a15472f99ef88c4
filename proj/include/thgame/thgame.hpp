#pragma once

// Pursuit-evasion games in arbitrary Keplerian reference orbits:
// closed-form TH state transition matrices, analytical Riccati gains,
// and a receding-horizon game simulator.

#include "thgame/orbit.hpp"      // reference orbit, anomalies, state transform
#include "thgame/stm.hpp"        // fundamental matrix, omega11/omega22, A, B
#include "thgame/jmatrix.hpp"    // J tables, omega12, defense_omega12
#include "thgame/riccati.hpp"    // analytical/numerical gains, time-to-go
#include "thgame/game.hpp"       // controls, dynamics, cost, disturbances
#include "thgame/sim.hpp"        // rk4, run_game, run_defense, comparisons
#include "thgame/scenarios.hpp"  // built-in benchmark presets
