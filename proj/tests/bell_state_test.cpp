#include "npp/bell_state.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace npp;

TEST(BellDiagonal, RejectsBadWeights)
{
    EXPECT_THROW(BellDiagonal(0.5, 0.5, 0.5, 0.0), std::domain_error);
    EXPECT_THROW(BellDiagonal(1.1, -0.1, 0.0, 0.0), std::domain_error);
    EXPECT_THROW(BellDiagonal(NAN, 0.0, 0.0, 1.0), std::domain_error);
}

TEST(BellDiagonal, RenormalizesWithinTolerance)
{
    const BellDiagonal s(0.5 + 4e-13, 0.5, 0.0, -1e-13);
    EXPECT_EQ(s.b4(), 0.0);
    EXPECT_NEAR(s.b1() + s.b2() + s.b3() + s.b4(), 1.0, 1e-15);
}

TEST(BellState, FromWerner)
{
    EXPECT_EQ(from_werner(WernerParam(1.0)), BellDiagonal::perfect());
    EXPECT_EQ(from_werner(WernerParam(0.0)), BellDiagonal::maximally_mixed());
    EXPECT_NEAR(from_werner(WernerParam(0.99)).b1(), 0.9925, 1e-15);
    EXPECT_THROW(WernerParam(-0.01), std::domain_error);
    EXPECT_THROW(WernerParam(1.01), std::domain_error);
}

TEST(BellState, FromRobustness)
{
    EXPECT_EQ(from_robustness(Robustness(0.0)), BellDiagonal(0.5, 0.5, 0.0, 0.0));
    EXPECT_NEAR(from_robustness(Robustness(0.985)).b1(), 0.9925, 1e-15);
    EXPECT_NEAR(from_robustness(Robustness(0.925)).b1(), 0.9625, 1e-15);
    EXPECT_THROW(Robustness(1.0), std::domain_error);
    EXPECT_THROW(Robustness(-0.1), std::domain_error);
}

TEST(BellState, RobustnessRapidity)
{
    for (double r : {0.0, 0.3, 0.925, 0.985, 0.999}) {
        const Robustness rob(r);
        EXPECT_NEAR(std::tanh(rob.rapidity()), r, 1e-12);
        EXPECT_NEAR(Robustness::from_rapidity(rob.rapidity()).value(), r, 1e-12);
        EXPECT_GE(rob.fidelity(), 0.5);
        EXPECT_LT(rob.fidelity(), 1.0);
        EXPECT_EQ(from_robustness(rob).b1() > 0.5, r > 0.0);
    }
}

TEST(BellState, EntanglementFactor)
{
    EXPECT_NEAR(entanglement_factor(WernerParam(1.0 / 3.0)), 0.0, 1e-15);
    EXPECT_EQ(entanglement_factor(WernerParam(1.0)), -1.0);
    EXPECT_NEAR(entanglement_factor(WernerParam(0.95)), -0.925, 1e-15);
}

TEST(BellState, ChshFactor)
{
    EXPECT_NEAR(bell_chsh_factor(WernerParam(1.0)), 2.0 * std::numbers::sqrt2, 1e-15);
    EXPECT_NEAR(bell_chsh_factor(WernerParam(1.0 / std::numbers::sqrt2)), 2.0, 1e-15);
    EXPECT_NEAR(bell_chsh_factor(WernerParam(0.95)), 2.6870057685088806, 1e-15);
}

TEST(BellState, WernerPropertiesOnRandomP)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double prev_p = -1.0, prev_lambda = 0.0, prev_chsh = 0.0;
    for (int i = 0; i < 2000; ++i) {
        const double p = (i == 0) ? 0.0 : (i == 1999 ? 1.0 : unit(rng));
        const BellDiagonal s = from_werner(WernerParam(p));
        double sum = 0.0;
        for (double w : s.weights()) {
            EXPECT_GE(w, 0.0);
            sum += w;
        }
        EXPECT_NEAR(sum, 1.0, 1e-15);
        EXPECT_NEAR(to_werner(s).value(), p, 1e-12);
    }
    // strict monotonicity on an ordered grid
    for (int i = 0; i <= 1000; ++i) {
        const double p = i / 1000.0;
        const double lambda = entanglement_factor(WernerParam(p));
        const double chsh = bell_chsh_factor(WernerParam(p));
        if (prev_p >= 0.0) {
            EXPECT_LT(lambda, prev_lambda);
            EXPECT_GT(chsh, prev_chsh);
        }
        prev_p = p;
        prev_lambda = lambda;
        prev_chsh = chsh;
    }
}

TEST(BellState, ToWernerRejectsLowFidelity)
{
    EXPECT_THROW(to_werner(BellDiagonal(0.1, 0.3, 0.3, 0.3)), std::domain_error);
}
