#pragma once

#include <stdexcept>

#include "thgame/orbit.hpp"

namespace thgame {

/// Scalar weights of the game cost: S = diag(s_r I3, O3), R_p = r_p I3,
/// R_e = r_e I3.
struct GameWeights {
    double s_r;
    double r_p;
    double r_e;

    GameWeights(double s_r_, double r_p_, double r_e_)
        : s_r(s_r_), r_p(r_p_), r_e(r_e_) {
        if (!(r_p > 0.0)) throw std::invalid_argument("GameWeights: r_p must be > 0");
        if (!(r_e > 0.0)) throw std::invalid_argument("GameWeights: r_e must be > 0");
        if (!(s_r >= 0.0)) throw std::invalid_argument("GameWeights: s_r must be >= 0");
    }

    Mat6 terminal_weight() const {
        Mat6 s = Mat6::Zero();
        s(0, 0) = s(1, 1) = s(2, 2) = s_r;
        return s;
    }
};

}  // namespace thgame
