#pragma once

#include <cmath>

#include "thgame/stm.hpp"
#include "thgame/weights.hpp"

// Closed-form antiderivative J of the control-coupling integrand
//
//     dJ/df = phi^{-1}(f) diag(O, rho^-6 I3) phi^{-T}(f),
//
// expressed in the regime-native argument (E, f, or H). Only the upper
// triangle is populated; the matrix is symmetric and the in-plane /
// out-of-plane cross entries (1,5),(1,6),(2,5),(2,6),(3,5),(3,6),(4,5),(4,6)
// vanish identically. Every entry is validated against adaptive quadrature
// of the integrand in tests/unit/test_jmatrix.cpp; a few entries below were
// regenerated from that identity where the customary closed forms fail it
// (J44 in both non-parabolic regimes, the overall signs of elliptic J55 and
// J56, the elliptic J34 cos^3 term, and the sign of the parabolic J34
// rho^-6 term).

namespace thgame {

struct JTable {
    Regime regime;
    Mat6 m;
};

namespace detail {

inline Mat6 j_elliptic(double e, double E) {
    const double sE = std::sin(E);
    const double cE = std::cos(E);
    const double c2 = cE * cE, c3 = c2 * cE, c4 = c3 * cE, c5 = c4 * cE;
    const double E2 = E * E;
    const double e2 = e * e, e3 = e2 * e, e4 = e3 * e, e5 = e4 * e, e6 = e5 * e,
                 e7 = e6 * e, e8 = e7 * e, e9 = e8 * e;
    const double om = 1.0 - e2;
    const double som = std::sqrt(om);
    const double om4 = om * om * om * om, om5 = om4 * om, om6 = om5 * om,
                 om7 = om6 * om;

    Mat6 J = Mat6::Zero();

    J(0, 0) = -3.0 / (2.0 * om7 * som) *
        (-(((-2.0 / 15.0) * e4 - (2.0 / 15.0) * e2 + 2.0 / 15.0) * sE + e3 * E) * e3 * c4
         - (8.0 / 3.0) * (((-5.0 / 32.0) * e4 - (1.0 / 16.0) * e2 - 5.0 / 16.0) * sE
                          + e * (1.0 + e2) * E) * e2 * c3
         - 2.0 * e * ((7.0 / 9.0 - (4.0 / 45.0) * e6 + (E2 - 44.0 / 45.0) * e4
                       - (7.0 / 15.0) * e2) * sE - (13.0 / 2.0) * e3 * E - 4.0 * e * E) * c2
         + ((1.0 - (49.0 / 24.0) * e6 + (3.0 * E2 - 187.0 / 12.0) * e4
             - (85.0 / 12.0) * e2) * sE - 8.0 * e * (1.0 + e4) * E) * cE
         + ((16.0 / 45.0) * e7 + (-4.0 * E2 + 1016.0 / 45.0) * e5
            + (126.0 / 5.0 + 6.0 * E2) * e3 + (128.0 / 9.0) * e) * sE
         + (-5.0 / 3.0 - (49.0 / 24.0) * e6 + (E2 - 251.0 / 12.0) * e4
            + (-63.0 / 4.0 - 2.0 * E2) * e2) * E);

    J(0, 1) = 1.0 / (60.0 * om6) *
        (-12.0 * e3 * c5 + (-15.0 * e6 + 45.0 * e4 + 75.0 * e2) * c4
         + (-40.0 * e5 - 100.0 * e3 - 140.0 * e) * c3
         + (-60.0 * e3 * (e2 - 2.0) * E * sE + 150.0 * e4 + 150.0 * e2 + 90.0) * c2
         + ((90.0 * e4 * E - 360.0 * e2 * E) * sE - 120.0 * e5 + 240.0 * e3 + 300.0 * e) * cE
         + 45.0 * ((-e3 + 4.0 * e) * sE * sE
                   - (8.0 / 3.0) * (e4 - 3.5 * e2 - 3.0) * E * sE
                   + e * (e2 - 6.0) * E2) * e);

    J(0, 2) = 1.0 / (60.0 * om6) *
        (-12.0 * e4 * c5 + (30.0 * e5 + 75.0 * e3) * c4
         + (-100.0 * e4 - 180.0 * e2) * c3
         + (60.0 * e4 * E * sE + 180.0 * e3 + 210.0 * e) * c2
         + (-270.0 * e3 * E * sE + 120.0 * e4 + 420.0 * e2 - 120.0) * cE
         + 135.0 * e3 * sE * sE + (120.0 * e4 * E + 540.0 * e2 * E) * sE
         - 135.0 * e3 * E2 - 90.0 * e * E2);

    J(0, 3) = -3.0 / (2.0 * om7 * som) *
        ((((-2.0 / 15.0) * e4 + (4.0 / 15.0) * e6) * sE - e5 * E) * c4
         + (4.0 / 3.0) * e2 * c3 * (((-1.0 / 4.0) * e5 + (3.0 / 16.0) * e3
                                     + (9.0 / 8.0) * e) * sE + E * (e4 - 4.0 * e2 - 1.0))
         - 2.0 * ((e7 / 9.0 - (8.0 / 45.0) * e5 + e3 * (E2 - 86.0 / 45.0)
                   + (11.0 / 9.0) * e) * sE
                  + 2.0 * (e4 - (21.0 / 4.0) * e2 - 1.0) * E) * e * c2
         + (((11.0 / 6.0) * e7 - (13.0 / 8.0) * e5 + (3.0 * E2 - 275.0 / 12.0) * e3
             - e) * sE - 4.0 * E * (1.0 + e2) * (1.0 + e2)) * cE
         + (16.0 / 3.0 - (4.0 / 9.0) * e8 - (298.0 / 45.0) * e6
            + (1304.0 / 45.0 - 4.0 * E2) * e4 + (6.0 * E2 + 316.0 / 9.0) * e2) * sE
         + e * E * ((11.0 / 6.0) * e6 + (41.0 / 24.0) * e4 + (E2 - 129.0 / 4.0) * e2
                    - 2.0 * E2 - 35.0 / 3.0));

    J(1, 1) = 1.0 / (2.0 * om5 * som) *
        (((-2.0 / 5.0) * e3 * c4 + (5.0 / 2.0) * e2 * c3
          - (2.0 / 3.0) * e * (e6 - 5.0 * e4 + (39.0 / 5.0) * e2 + 7.0) * c2
          + (e6 - 9.0 * e4 + (75.0 / 4.0) * e2 + 3.0) * cE
          - (4.0 / 3.0) * e7 + (26.0 / 3.0) * e5 - (22.0 / 5.0) * e3
          - (82.0 / 3.0) * e) * sE
         + E * (e6 - 11.0 * e4 + (83.0 / 4.0) * e2 + 5.0));

    J(1, 2) = -3.0 / (2.0 * om5 * som) *
        (((2.0 / 15.0) * e4 * c4 - (5.0 / 6.0) * e3 * c3
          + ((-2.0 / 9.0) * e6 + (28.0 / 45.0) * e4 + 2.0 * e2) * c2
          + (e5 - (13.0 / 4.0) * e3 - (7.0 / 3.0) * e) * cE
          - (4.0 / 9.0) * e6 - (34.0 / 45.0) * e4 + 8.0 * e2 + 4.0 / 3.0) * sE
         + e * E * (e4 - (31.0 / 12.0) * e2 - 11.0 / 3.0));

    J(1, 3) = 1.0 / (60.0 * om6) *
        (-12.0 * e4 * c5 + (-30.0 * e5 + 135.0 * e3) * c4
         + (40.0 * e6 - 100.0 * e4 - 220.0 * e2) * c3
         + (-60.0 * e2 * (e2 - 2.0) * E * sE - 120.0 * e5 + 465.0 * e3 - 90.0 * e) * c2
         + ((90.0 * e3 * E - 360.0 * e * E) * sE - 60.0 * e2 + 480.0) * cE
         - 120.0 * (e4 - 3.5 * e2 - 3.0) * E * sE
         + 45.0 * ((E2 - 1.0) * e2 - 6.0 * E2 + 4.0) * e);

    J(2, 2) = 1.0 / (120.0 * om5 * som) *
        ((-24.0 * e5 * c4 + 150.0 * e4 * c3 + (-32.0 * e5 - 400.0 * e3) * c2
          + (225.0 * e4 + 600.0 * e2) * cE - 64.0 * e5 - 800.0 * e3 - 600.0 * e) * sE
         + 225.0 * e4 * E + 600.0 * e2 * E + 120.0 * E);

    J(2, 3) = 1.0 / (60.0 * om6) *
        (-12.0 * e5 * c5 + (-15.0 * e6 + 120.0 * e4) * c4
         + (60.0 * e5 - 340.0 * e3) * c3
         + (60.0 * e3 * E * sE - 90.0 * e4 + 345.0 * e2) * c2
         + (-270.0 * e2 * E * sE + 180.0 * e3 + 240.0 * e) * cE
         + (120.0 * e3 * E + 540.0 * e * E) * sE + (-135.0 * E2 + 135.0) * e2
         - 90.0 * E2);

    {
        const double A =
            (((1.5 * E * e4) * cE + (-4.0 * E * e5 + 12.0 * E * e3)) * cE
             + (12.0 * E * e4 - 43.5 * E * e2)) * cE * cE
            + 24.0 * E * e * cE
            + (-1.5 * E2 * E * e2 + 3.0 * E2 * E + 1.75 * E * e8
               - (87.0 / 8.0) * E * e6 - (81.0 / 16.0) * E * e4
               + (283.0 / 4.0) * E * e2 + 4.0 * E);
        const double B =
            ((((-0.2 * e7) * cE + (-0.5 * e8 + 3.75 * e6 - (43.0 / 8.0) * e4)) * cE
              + (3.0 * E2 * e3 - e9 / 3.0 + 3.4 * e7 - (28.0 / 3.0) * e5 + 4.0 * e3)) * cE
             + (-4.5 * E2 * e2 + 1.75 * e8 - (111.0 / 8.0) * e6
                + (287.0 / 16.0) * e4 + (119.0 / 4.0) * e2)) * cE
            + (6.0 * E2 * e3 - 9.0 * E2 * e - (2.0 / 3.0) * e9 - 0.2 * e7
               + (103.0 / 3.0) * e5 - 79.0 * e3 - 48.0 * e);
        J(3, 3) = (A + sE * B) / (om7 * som);
    }

    J(4, 4) = 3.0 / (8.0 * om4 * som) *
        (((8.0 / 15.0) * e3 * c4 - 2.0 * e2 * c3
          + ((-8.0 / 45.0) * e3 + (8.0 / 3.0) * e) * c2
          + (e2 - 4.0 / 3.0) * cE - (16.0 / 45.0) * e3 - (8.0 / 3.0) * e) * sE
         + E * (e2 + 4.0 / 3.0));

    J(4, 5) = cE / (4.0 * om5) *
        ((-4.0 / 5.0) * e3 * c4 + (e4 + 3.0 * e2) * c3 + (-4.0 * e3 - 4.0 * e) * c2
         + (6.0 * e2 + 2.0) * cE - 4.0 * e);

    J(5, 5) = 9.0 / (4.0 * om5 * som) *
        (((-4.0 / 45.0) * e3 * c4 + ((2.0 / 9.0) * e4 + (1.0 / 3.0) * e2) * c3
          + ((-4.0 / 27.0) * e5 - (136.0 / 135.0) * e3 - (4.0 / 9.0) * e) * c2
          + (e4 + (11.0 / 6.0) * e2 + 2.0 / 9.0) * cE
          - (8.0 / 27.0) * e5 - (452.0 / 135.0) * e3 - (16.0 / 9.0) * e) * sE
         + E * (e4 + (41.0 / 18.0) * e2 + 2.0 / 9.0));

    return J;
}

inline Mat6 j_parabolic(double f) {
    const double s2 = std::sin(0.5 * f);
    const double c2 = std::cos(0.5 * f);
    const double t = s2 / c2;
    const double u = 1.0 + std::cos(f);
    const double cp2 = c2 * c2;
    const double u3 = u * u * u, u4 = u3 * u, u5 = u4 * u, u6 = u5 * u;
    const double t2 = t * t, t3 = t2 * t, t5 = t3 * t2, t7 = t5 * t2,
                 t9 = t7 * t2, t11 = t9 * t2;

    // powers of cos^2(f/2); denominators below are cos^15(f/2) = p14 * c2
    const double p2 = cp2, p4 = p2 * p2, p6 = p4 * p2, p8 = p6 * p2,
                 p10 = p8 * p2, p12 = p10 * p2, p14 = p12 * p2;

    Mat6 J = Mat6::Zero();

    J(0, 0) = -s2 / (144144000.0 * p14 * c2) *
        (237568.0 * p14 + 118784.0 * p12 + 89088.0 * p10 - 1847680.0 * p8
         + 185080.0 * p6 + 166572.0 * p4 - 72534.0 * p2 - 3003.0);

    J(0, 1) = 1.0 / (25.0 * u5) + 3.0 / (20.0 * u4) - 4.0 / (15.0 * u3) - 1.0 / (15.0 * u6);
    J(0, 2) = 1.0 / (10.0 * u4) + 2.0 / (25.0 * u5) - 1.0 / (15.0 * u6);

    J(0, 3) = -s2 / (48048000.0 * p14 * c2) *
        (51456.0 * p14 + 25728.0 * p12 + 19296.0 * p10 + 977040.0 * p8
         + 104160.0 * p6 - 26376.0 * p4 - 24178.0 * p2 - 1001.0);

    J(1, 1) = t11 / 352.0 + 5.0 * t9 / 288.0 + t7 / 112.0 + t5 / 80.0
        + 13.0 * t3 / 96.0 + 9.0 * t / 32.0;
    J(1, 2) = t11 / 352.0 + 5.0 * t9 / 288.0 + 3.0 * t7 / 112.0 - t5 / 80.0
        - 7.0 * t3 / 96.0 - 3.0 * t / 32.0;
    J(1, 3) = -4.0 / (25.0 * u5) - 1.0 / (10.0 * u4) + 2.0 / (5.0 * u3) - 1.0 / (15.0 * u6);

    J(2, 2) = t11 / 352.0 + 5.0 * t9 / 288.0 + 5.0 * t7 / 112.0 + t5 / 16.0
        + 5.0 * t3 / 96.0 + t / 32.0;
    J(2, 3) = -3.0 / (25.0 * u5) - 3.0 / (20.0 * u4) - 1.0 / (15.0 * u6);

    J(3, 3) = s2 / (144144000.0 * p14 * c2) *
        (1759232.0 * p14 + 879616.0 * p12 + 659712.0 * p10 + 4874080.0 * p8
         + 1562120.0 * p6 + 324828.0 * p4 + 72534.0 * p2 + 3003.0);

    J(4, 4) = t9 / 72.0 + 3.0 * t7 / 56.0 + 3.0 * t5 / 40.0 + t3 / 24.0;
    J(4, 5) = 1.0 / (5.0 * u5) - 1.0 / (4.0 * u4);
    J(5, 5) = t11 / 352.0 + t9 / 288.0 - t7 / 112.0 - t5 / 80.0 + t3 / 96.0 + t / 32.0;

    return J;
}

inline Mat6 j_hyperbolic(double e, double H) {
    const double sh = std::sinh(H);
    const double ch = std::cosh(H);
    const double c2 = ch * ch, c3 = c2 * ch, c4 = c3 * ch, c5 = c4 * ch;
    const double H2 = H * H;
    const double e2 = e * e, e3 = e2 * e, e4 = e3 * e, e5 = e4 * e, e6 = e5 * e,
                 e7 = e6 * e, e8 = e7 * e, e9 = e8 * e;
    const double em = e2 - 1.0;
    const double sem = std::sqrt(em);
    const double em4 = em * em * em * em, em5 = em4 * em, em6 = em5 * em,
                 em7 = em6 * em;

    Mat6 J = Mat6::Zero();

    J(0, 0) = -3.0 / (2.0 * em7 * sem) *
        (e3 * (((-2.0 / 15.0) * e4 - (2.0 / 15.0) * e2 + 2.0 / 15.0) * sh + e3 * H) * c4
         + (8.0 / 3.0) * e2 * c3 * (((-5.0 / 32.0) * e4 - (1.0 / 16.0) * e2
                                     - 5.0 / 16.0) * sh + e * (e2 + 1.0) * H)
         - 2.0 * e * ((-7.0 / 9.0 + (4.0 / 45.0) * e6 + (H2 + 44.0 / 45.0) * e4
                       + (7.0 / 15.0) * e2) * sh + (13.0 / 2.0) * e3 * H + 4.0 * e * H) * c2
         + ((-1.0 + (49.0 / 24.0) * e6 + (3.0 * H2 + 187.0 / 12.0) * e4
             + (85.0 / 12.0) * e2) * sh + 8.0 * e * (e4 + 1.0) * H) * ch
         + ((-16.0 / 45.0) * e7 + (-4.0 * H2 - 1016.0 / 45.0) * e5
            + (6.0 * H2 - 126.0 / 5.0) * e3 - (128.0 / 9.0) * e) * sh
         + H * (5.0 / 3.0 + (49.0 / 24.0) * e6 + (H2 + 251.0 / 12.0) * e4
                + (-2.0 * H2 + 63.0 / 4.0) * e2));

    J(0, 1) = 1.0 / (60.0 * em6) *
        (-12.0 * e3 * c5 + (-15.0 * e6 + 45.0 * e4 + 75.0 * e2) * c4
         + (-40.0 * e5 - 100.0 * e3 - 140.0 * e) * c3
         + (60.0 * e3 * (e2 - 2.0) * H * sh + 195.0 * e4 - 30.0 * e2 + 90.0) * c2
         + ((-90.0 * e4 * H + 360.0 * e2 * H) * sh - 120.0 * e5 + 240.0 * e3
            + 300.0 * e) * ch
         - 45.0 * e * H * (((-8.0 / 3.0) * e4 + (28.0 / 3.0) * e2 + 8.0) * sh
                           + e * (e2 - 6.0) * H));

    J(0, 2) = 1.0 / (60.0 * em6) *
        (-12.0 * e4 * c5 + (30.0 * e5 + 75.0 * e3) * c4
         + (-100.0 * e4 - 180.0 * e2) * c3
         + (-60.0 * e4 * H * sh + 45.0 * e3 + 210.0 * e) * c2
         + (270.0 * e3 * H * sh + 120.0 * e4 + 420.0 * e2 - 120.0) * ch
         + 135.0 * e * H * (((-8.0 / 9.0) * e3 - 4.0 * e) * sh + H * (e2 + 2.0 / 3.0)));

    J(0, 3) = -3.0 / (2.0 * em7 * sem) *
        ((((-4.0 / 15.0) * e6 + (2.0 / 15.0) * e4) * sh + e5 * H) * c4
         - (4.0 / 3.0) * e2 * c3 * (((-1.0 / 4.0) * e5 + (3.0 / 16.0) * e3
                                     + (9.0 / 8.0) * e) * sh + H * (e4 - 4.0 * e2 - 1.0))
         - 2.0 * ((-e7 / 9.0 + (8.0 / 45.0) * e5 + (H2 + 86.0 / 45.0) * e3
                   - (11.0 / 9.0) * e) * sh
                  - 2.0 * H * (e4 - (21.0 / 4.0) * e2 - 1.0)) * e * c2
         + (((-11.0 / 6.0) * e7 + (13.0 / 8.0) * e5 + (275.0 / 12.0 + 3.0 * H2) * e3
             + e) * sh + 4.0 * (e2 + 1.0) * (e2 + 1.0) * H) * ch
         + (-16.0 / 3.0 + (4.0 / 9.0) * e8 + (298.0 / 45.0) * e6
            + (-4.0 * H2 - 1304.0 / 45.0) * e4 + (-316.0 / 9.0 + 6.0 * H2) * e2) * sh
         + e * H * ((-11.0 / 6.0) * e6 - (41.0 / 24.0) * e4 + (129.0 / 4.0 + H2) * e2
                    + 35.0 / 3.0 - 2.0 * H2));

    J(1, 1) = -1.0 / (2.0 * em5 * sem) *
        (((-2.0 / 5.0) * e3 * c4 + (5.0 / 2.0) * e2 * c3
          - (2.0 / 3.0) * e * (e6 - 5.0 * e4 + (39.0 / 5.0) * e2 + 7.0) * c2
          + (e6 - 9.0 * e4 + (75.0 / 4.0) * e2 + 3.0) * ch
          - (4.0 / 3.0) * e7 + (26.0 / 3.0) * e5 - (22.0 / 5.0) * e3
          - (82.0 / 3.0) * e) * sh
         + H * (e6 - 11.0 * e4 + (83.0 / 4.0) * e2 + 5.0));

    J(1, 2) = 3.0 / (2.0 * em5 * sem) *
        (((2.0 / 15.0) * e4 * c4 - (5.0 / 6.0) * e3 * c3
          + ((-2.0 / 9.0) * e6 + (28.0 / 45.0) * e4 + 2.0 * e2) * c2
          + (e5 - (13.0 / 4.0) * e3 - (7.0 / 3.0) * e) * ch
          - (4.0 / 9.0) * e6 - (34.0 / 45.0) * e4 + 8.0 * e2 + 4.0 / 3.0) * sh
         + e * H * (e4 - (31.0 / 12.0) * e2 - 11.0 / 3.0));

    J(1, 3) = 1.0 / (60.0 * em6) *
        (-12.0 * e4 * c5 + (-30.0 * e5 + 135.0 * e3) * c4
         + (40.0 * e6 - 100.0 * e4 - 220.0 * e2) * c3
         + (60.0 * e2 * (e2 - 2.0) * H * sh - 120.0 * e5 + 465.0 * e3 - 90.0 * e) * c2
         + ((-90.0 * e3 * H + 360.0 * e * H) * sh - 60.0 * e2 + 480.0) * ch
         - 45.0 * H * (((-8.0 / 3.0) * e4 + (28.0 / 3.0) * e2 + 8.0) * sh
                       + e * (e2 - 6.0) * H));

    J(2, 2) = 1.0 / (120.0 * em5 * sem) *
        ((24.0 * e5 * c4 - 150.0 * e4 * c3 + (32.0 * e5 + 400.0 * e3) * c2
          + (-225.0 * e4 - 600.0 * e2) * ch + 64.0 * e5 + 800.0 * e3 + 600.0 * e) * sh
         - 225.0 * e4 * H - 600.0 * e2 * H - 120.0 * H);

    J(2, 3) = 1.0 / (60.0 * em6) *
        (-12.0 * e5 * c5 + (-15.0 * e6 + 120.0 * e4) * c4
         + (60.0 * e5 - 340.0 * e3) * c3
         + (-60.0 * e3 * H * sh - 90.0 * e4 + 345.0 * e2) * c2
         + (270.0 * e2 * H * sh + 180.0 * e3 + 240.0 * e) * ch
         + 135.0 * H * (((-8.0 / 9.0) * e3 - 4.0 * e) * sh + H * (e2 + 2.0 / 3.0)));

    {
        const double A =
            (((-1.5 * H * e4) * ch + (4.0 * H * e5 - 12.0 * H * e3)) * ch
             + (-12.0 * H * e4 + 43.5 * H * e2)) * ch * ch
            - 24.0 * H * e * ch
            + (-1.5 * H2 * H * e2 + 3.0 * H2 * H - 1.75 * H * e8
               + (87.0 / 8.0) * H * e6 + (81.0 / 16.0) * H * e4
               - (283.0 / 4.0) * H * e2 - 4.0 * H);
        const double B =
            ((((0.2 * e7) * ch + (0.5 * e8 - 3.75 * e6 + (43.0 / 8.0) * e4)) * ch
              + (3.0 * H2 * e3 + e9 / 3.0 - 3.4 * e7 + (28.0 / 3.0) * e5 - 4.0 * e3)) * ch
             + (-4.5 * H2 * e2 - 1.75 * e8 + (111.0 / 8.0) * e6
                - (287.0 / 16.0) * e4 - (119.0 / 4.0) * e2)) * ch
            + (6.0 * H2 * e3 - 9.0 * H2 * e + (2.0 / 3.0) * e9 + 0.2 * e7
               - (103.0 / 3.0) * e5 + 79.0 * e3 + 48.0 * e);
        J(3, 3) = (A + sh * B) / (em7 * sem);
    }

    J(4, 4) = 3.0 / (8.0 * em4 * sem) *
        (((8.0 / 15.0) * e3 * c4 - 2.0 * e2 * c3
          + ((-8.0 / 45.0) * e3 + (8.0 / 3.0) * e) * c2
          + (e2 - 4.0 / 3.0) * ch - (16.0 / 45.0) * e3 - (8.0 / 3.0) * e) * sh
         + H * (e2 + 4.0 / 3.0));

    J(4, 5) = -ch / (4.0 * em5) *
        ((-4.0 / 5.0) * e3 * c4 + (e4 + 3.0 * e2) * c3 + (-4.0 * e3 - 4.0 * e) * c2
         + (6.0 * e2 + 2.0) * ch - 4.0 * e);

    J(5, 5) = -9.0 / (4.0 * em5 * sem) *
        (((-4.0 / 45.0) * e3 * c4 + ((2.0 / 9.0) * e4 + (1.0 / 3.0) * e2) * c3
          + ((-4.0 / 27.0) * e5 - (136.0 / 135.0) * e3 - (4.0 / 9.0) * e) * c2
          + (e4 + (11.0 / 6.0) * e2 + 2.0 / 9.0) * ch
          - (8.0 / 27.0) * e5 - (452.0 / 135.0) * e3 - (16.0 / 9.0) * e) * sh
         + H * (e4 + (41.0 / 18.0) * e2 + 2.0 / 9.0));

    return J;
}

}  // namespace detail

/// J(f): symmetric antiderivative matrix used by the coupling STM.
inline JTable j_matrix(const ReferenceOrbit& orbit, double f) {
    orbit.require_valid_f(f);
    const Regime regime = orbit.regime();
    Mat6 upper;
    switch (regime) {
        case Regime::Elliptic:
            upper = detail::j_elliptic(orbit.e(), true_to_eccentric(orbit.e(), f));
            break;
        case Regime::Parabolic:
            upper = detail::j_parabolic(f);
            break;
        case Regime::Hyperbolic:
            upper = detail::j_hyperbolic(orbit.e(), true_to_hyperbolic(orbit.e(), f));
            break;
    }
    Mat6 full = upper;
    full += upper.triangularView<Eigen::StrictlyUpper>().transpose();
    return {regime, full};
}

/// Control-coupling STM of the two-player game:
/// omega12(f2,f1) = (1/n^4)(1/r_e - 1/r_p) phi(f2) (J(f2)-J(f1)) phi^T(f1).
inline Mat6 omega12(const ReferenceOrbit& orbit, const GameWeights& w, double f2,
                    double f1) {
    const double n = orbit.n();
    const double scale = (1.0 / (n * n * n * n)) * (1.0 / w.r_e - 1.0 / w.r_p);
    return scale * phi(orbit, f2) * (j_matrix(orbit, f2).m - j_matrix(orbit, f1).m) *
           phi(orbit, f1).transpose();
}

/// One-sided coupling STM (uncontrolled target): factor -1/(n^4 r_p).
inline Mat6 defense_omega12(const ReferenceOrbit& orbit, double r_p, double f2,
                            double f1) {
    if (!(r_p > 0.0)) throw std::invalid_argument("defense_omega12: r_p must be > 0");
    const double n = orbit.n();
    const double scale = -1.0 / (n * n * n * n * r_p);
    return scale * phi(orbit, f2) * (j_matrix(orbit, f2).m - j_matrix(orbit, f1).m) *
           phi(orbit, f1).transpose();
}

}  // namespace thgame
