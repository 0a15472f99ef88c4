#include <cmath>
#include <random>

#include <gtest/gtest.h>
#include <thgame/stm.hpp>

#include "support/oracles.hpp"

namespace thgame {
namespace {

const ReferenceOrbit kEll(4.2241e7, 0.2, 3.98603e14);
const ReferenceOrbit kPar(4.2241e7, 1.0, 3.98603e14);
const ReferenceOrbit kHyp(4.2241e7, 1.5, 3.98603e14);
const ReferenceOrbit kCirc(4.2241e7, 0.0, 3.98603e14);

std::vector<ReferenceOrbit> regimes() { return {kEll, kPar, kHyp}; }

TEST(Phi, CircularPeriapsisEntries) {
    const Mat6 m = phi(kCirc, 0.0);
    EXPECT_DOUBLE_EQ(m(0, 0), 0.0);  // phi1
    EXPECT_DOUBLE_EQ(m(3, 0), 1.0);  // phi1'
    EXPECT_DOUBLE_EQ(m(1, 0), 2.0);  // -2 S(phi1)
}

TEST(Phi, OutOfPlaneBlockStructure) {
    std::mt19937 gen(1);
    for (const auto& orbit : regimes()) {
        const double f = test::random_valid_f(gen, orbit);
        const Mat6 m = phi(orbit, f);
        EXPECT_DOUBLE_EQ(m(2, 4), std::cos(f));
        EXPECT_DOUBLE_EQ(m(2, 5), std::sin(f));
        EXPECT_DOUBLE_EQ(m(5, 4), -std::sin(f));
        EXPECT_DOUBLE_EQ(m(5, 5), std::cos(f));
        // out-of-plane rows/cols carry nothing else
        for (int j : {0, 1, 2, 3}) {
            EXPECT_DOUBLE_EQ(m(2, j), 0.0);
            EXPECT_DOUBLE_EQ(m(5, j), 0.0);
        }
        for (int i : {0, 1, 3, 4}) {
            EXPECT_DOUBLE_EQ(m(i, 4), 0.0);
            EXPECT_DOUBLE_EQ(m(i, 5), 0.0);
        }
    }
}

TEST(PhiInverse, CircularPeriapsisEntries) {
    const Mat6 m = phi_inverse(kCirc, 0.0);
    EXPECT_DOUBLE_EQ(m(2, 0), -2.0);
    EXPECT_DOUBLE_EQ(m(2, 4), -1.0);
}

TEST(PhiInverse, ClosedFormInverseIdentity) {
    std::mt19937 gen(2);
    for (const auto& orbit : regimes()) {
        for (int i = 0; i < 100; ++i) {
            const double f = test::random_valid_f(gen, orbit);
            const Mat6 prod = phi(orbit, f) * phi_inverse(orbit, f);
            EXPECT_LT((prod - Mat6::Identity()).cwiseAbs().maxCoeff(), 1e-9);
        }
    }
}

TEST(PhiInverse, MatchesNumericalInverse) {
    std::mt19937 gen(3);
    for (const auto& orbit : regimes()) {
        for (int i = 0; i < 25; ++i) {
            const double f = test::random_valid_f(gen, orbit);
            const Mat6 closed = phi_inverse(orbit, f);
            const Mat6 numeric = phi(orbit, f).inverse();  // LU oracle
            EXPECT_LT((closed - numeric).cwiseAbs().maxCoeff(),
                      1e-9 * numeric.cwiseAbs().maxCoeff());
        }
    }
}

// Every column of phi must satisfy the homogeneous true-anomaly ODE
// s' = A(f) s; this single check validates phi1..phi3, S(.), L(f), C(f).
TEST(Phi, ColumnsSolveHomogeneousOde) {
    std::mt19937 gen(4);
    const double h = 1e-6;
    for (const auto& orbit : regimes()) {
        for (int i = 0; i < 100; ++i) {
            const double f = test::random_valid_f(gen, orbit, 5.0);
            if (!orbit.valid_f(f + h) || !orbit.valid_f(f - h)) continue;
            const Mat6 dphi = (phi(orbit, f + h) - phi(orbit, f - h)) / (2.0 * h);
            const Mat6 rhs = th_system_matrix(orbit, f) * phi(orbit, f);
            const double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
            EXPECT_LT((dphi - rhs).cwiseAbs().maxCoeff() / scale, 1e-6);
        }
    }
}

TEST(Omega11, IdentityAtEqualAnomalies) {
    for (const auto& orbit : regimes()) {
        EXPECT_LT((omega11(orbit, 0.4, 0.4) - Mat6::Identity()).cwiseAbs().maxCoeff(),
                  1e-12);
    }
}

TEST(Omega11, CompositionGroupProperty) {
    std::mt19937 gen(5);
    for (const auto& orbit : regimes()) {
        for (int i = 0; i < 30; ++i) {
            const double f1 = test::random_valid_f(gen, orbit, 2.0);
            const double f2 = test::random_valid_f(gen, orbit, 2.0);
            const double f3 = test::random_valid_f(gen, orbit, 2.0);
            const Mat6 direct = omega11(orbit, f3, f1);
            const Mat6 composed = omega11(orbit, f3, f2) * omega11(orbit, f2, f1);
            EXPECT_LT((direct - composed).cwiseAbs().maxCoeff() /
                          direct.cwiseAbs().maxCoeff(),
                      1e-9);
        }
    }
}

TEST(Omega11, MatchesRk4Propagation) {
    std::mt19937 gen(6);
    for (const auto& orbit : regimes()) {
        const auto deriv = [&](double f, const Vec6& x) -> Vec6 {
            return th_system_matrix(orbit, f) * x;
        };
        for (int i = 0; i < 5; ++i) {
            const Vec6 x0 = test::random_state(gen, 1.0);
            const Vec6 via_stm = omega11(orbit, 0.3, 0.0) * x0;
            const Vec6 via_rk4 = test::propagate_rk4(deriv, 0.0, 0.3, x0, 30000);
            EXPECT_LT((via_stm - via_rk4).norm() / via_rk4.norm(), 1e-6);
        }
    }
}

TEST(Omega11, CircularReducesToCwTransition) {
    std::mt19937 gen(7);
    const auto deriv = [&](double f, const Vec6& x) -> Vec6 {
        return th_system_matrix(kCirc, f) * x;
    };
    const Vec6 x0 = test::random_state(gen, 1.0);
    const Vec6 via_stm = omega11(kCirc, 0.7, 0.1) * x0;
    const Vec6 via_rk4 = test::propagate_rk4(deriv, 0.1, 0.7, x0, 60000);
    EXPECT_LT((via_stm - via_rk4).norm() / via_rk4.norm(), 1e-8);
}

TEST(Omega22, DefiningIdentities) {
    std::mt19937 gen(8);
    for (const auto& orbit : regimes()) {
        EXPECT_LT((omega22(orbit, 0.2, 0.2) - Mat6::Identity()).cwiseAbs().maxCoeff(),
                  1e-12);
        for (int i = 0; i < 25; ++i) {
            const double f1 = test::random_valid_f(gen, orbit, 2.0);
            const double f2 = test::random_valid_f(gen, orbit, 2.0);
            const Mat6 o11 = omega11(orbit, f2, f1);
            const Mat6 o22 = omega22(orbit, f2, f1);
            EXPECT_LT((o22.transpose() * o11 - Mat6::Identity()).cwiseAbs().maxCoeff(),
                      1e-9);
            const Mat6 inv_t = o11.inverse().transpose();  // LU oracle
            EXPECT_LT((o22 - inv_t).cwiseAbs().maxCoeff() / inv_t.cwiseAbs().maxCoeff(),
                      1e-9);
        }
    }
}

// The costate system lambda' = -A^T lambda is propagated by omega22.
TEST(Omega22, PropagatesAdjointSystem) {
    std::mt19937 gen(9);
    for (const auto& orbit : regimes()) {
        const auto deriv = [&](double f, const Vec6& lam) -> Vec6 {
            return -th_system_matrix(orbit, f).transpose() * lam;
        };
        const Vec6 lam0 = test::random_state(gen, 1.0);
        const Vec6 via_stm = omega22(orbit, 0.25, 0.0) * lam0;
        const Vec6 via_rk4 = test::propagate_rk4(deriv, 0.0, 0.25, lam0, 25000);
        EXPECT_LT((via_stm - via_rk4).norm() / via_rk4.norm(), 1e-6);
    }
}

TEST(Phi, MultiRevolutionElliptic) {
    // transition across several revolutions stays consistent with composition
    const Mat6 direct = omega11(kEll, 13.0, 0.0);
    Mat6 stepped = Mat6::Identity();
    for (int k = 0; k < 13; ++k)
        stepped = omega11(kEll, k + 1.0, static_cast<double>(k)) * stepped;
    EXPECT_LT((direct - stepped).cwiseAbs().maxCoeff() / direct.cwiseAbs().maxCoeff(),
              1e-8);
}

TEST(InputMatrix, ScalesWithRhoCubed) {
    const double f = 0.6;
    const Mat63 b = th_input_matrix(kEll, f);
    const double expect = kEll.beta() / std::pow(rho(0.2, f), 3);
    EXPECT_DOUBLE_EQ(b(3, 0), expect);
    EXPECT_DOUBLE_EQ(b(4, 1), expect);
    EXPECT_DOUBLE_EQ(b(5, 2), expect);
    EXPECT_DOUBLE_EQ(b.topRows<3>().cwiseAbs().maxCoeff(), 0.0);
}

}  // namespace
}  // namespace thgame
