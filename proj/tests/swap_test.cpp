#include "npp/swap.hpp"

#include "npp/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace npp;

namespace
{

void
expect_near(const BellDiagonal& a, const BellDiagonal& b, double tol)
{
    for (std::size_t k = 0; k < 4; ++k)
        EXPECT_NEAR(a[k], b[k], tol) << "component " << k + 1;
}

} // anon

TEST(SwapPair, PerfectPairIsIdentity)
{
    EXPECT_EQ(swap_pair(BellDiagonal::perfect(), BellDiagonal::perfect()), BellDiagonal::perfect());
    const BellDiagonal b(0.4, 0.3, 0.2, 0.1);
    EXPECT_EQ(swap_pair(BellDiagonal::perfect(), b), b);
    EXPECT_EQ(swap_pair(b, BellDiagonal::perfect()), b);
}

TEST(SwapPair, QndPairsCompose)
{
    const BellDiagonal q = from_robustness(Robustness(0.9));
    const BellDiagonal out = swap_pair(q, q);
    // B1 B1' + (1-B1)(1-B1') with B1 = 0.95
    EXPECT_NEAR(out.b1(), 0.905, 1e-15);
    EXPECT_NEAR(out.b2(), 0.095, 1e-15);
    EXPECT_EQ(out.b3(), 0.0);
    EXPECT_EQ(out.b4(), 0.0);
}

TEST(SwapPair, PureBellLabelsMultiplyLikeKleinGroup)
{
    // |B_i> x |B_j> -> |B_{i*j}> with 1 = identity, 2*3 = 4, 2*4 = 3, 3*4 = 2
    const int table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            std::array<double, 4> a{}, b{};
            a[i] = 1.0;
            b[j] = 1.0;
            const BellDiagonal out = swap_pair(BellDiagonal(a), BellDiagonal(b));
            EXPECT_EQ(out[table[i][j]], 1.0) << i << "," << j;
        }
    }
}

TEST(SwapPair, CommutativeAndAssociative)
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        const auto a = oracle::random_bell_diagonal(rng);
        const auto b = oracle::random_bell_diagonal(rng);
        const auto c = oracle::random_bell_diagonal(rng);
        expect_near(swap_pair(a, b), swap_pair(b, a), 1e-12);
        expect_near(swap_pair(swap_pair(a, b), c), swap_pair(a, swap_pair(b, c)), 1e-12);
    }
}

TEST(SwapPair, FamiliesAreClosed)
{
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int t = 0; t < 200; ++t) {
        const auto q = swap_pair(from_robustness(Robustness(unit(rng) * 0.999)),
                                 from_robustness(Robustness(unit(rng) * 0.999)));
        EXPECT_EQ(q.b3(), 0.0);
        EXPECT_EQ(q.b4(), 0.0);

        const auto w = swap_pair(from_werner(WernerParam(unit(rng))), from_werner(WernerParam(unit(rng))));
        EXPECT_NEAR(w.b2(), w.b3(), 1e-15);
        EXPECT_NEAR(w.b3(), w.b4(), 1e-15);
    }
}

TEST(SwapQnd, Examples)
{
    EXPECT_NEAR(swap_qnd(Robustness(0.97), Robustness(0.97)).value(), 0.9409, 1e-15);
    EXPECT_EQ(swap_qnd(Robustness(0.0), Robustness(0.8)).value(), 0.0);
    // the R -> 1 limit is neutral
    EXPECT_NEAR(swap_qnd(Robustness(1.0 - 1e-15), Robustness(0.6)).value(), 0.6, 1e-14);

    const auto via_pair = swap_pair(from_robustness(Robustness(0.97)), from_robustness(Robustness(0.97)));
    EXPECT_NEAR(via_pair.b1(), (1.0 + 0.9409) / 2.0, 1e-15);
}

TEST(ChainRobustness, Conventions)
{
    EXPECT_NEAR(chain_robustness(Robustness(0.97), 10).value(), 0.73742412689492826, 1e-15);
    EXPECT_EQ(chain_robustness(Robustness(0.61), 1).value(), 0.61);
    EXPECT_NEAR(chain_robustness(Robustness(0.985), 2, ChainConvention::StrictChainLPlus1).value(), 0.955671625, 1e-15);

    Robustness folded(0.985);
    for (int i = 0; i < 2; ++i)
        folded = swap_qnd(folded, Robustness(0.985));
    EXPECT_NEAR(folded.value(), 0.955671625, 1e-15);

    EXPECT_THROW(chain_robustness(Robustness(0.9), 0), std::domain_error);
    EXPECT_EQ(chain_robustness(Robustness(0.9), 0, ChainConvention::StrictChainLPlus1).value(), 0.9);
}

TEST(ChainWernerFidelity, Examples)
{
    EXPECT_EQ(chain_werner_fidelity(1.0, 17), 1.0);
    EXPECT_NEAR(chain_werner_fidelity(0.9625, 5), 0.830335703125, 1e-15);
    EXPECT_NEAR(chain_werner_fidelity(0.9925, 1), 0.9925, 1e-15);
    EXPECT_THROW(chain_werner_fidelity(0.2, 3), std::domain_error);
}

TEST(SwapChain, MatchesClosedForms)
{
    const auto w = swap_chain(from_werner(WernerParam(0.95)), 5);
    EXPECT_NEAR(w.b1(), 0.830335703125, 1e-12);
    EXPECT_NEAR(w.b2(), w.b3(), 1e-15);
    EXPECT_NEAR(w.b3(), w.b4(), 1e-15);

    const auto q = swap_chain(from_robustness(Robustness(0.925)), 3);
    EXPECT_NEAR(q.b1(), 0.8957265625, 1e-12);

    for (int l : {1, 4, 9})
        EXPECT_EQ(swap_chain(BellDiagonal::maximally_mixed(), l), BellDiagonal::maximally_mixed());

    for (int l = 1; l <= 30; ++l) {
        const double p = 0.93;
        expect_near(swap_chain(from_werner(WernerParam(p)), l), from_werner(WernerParam(std::pow(p, l))), 1e-12);
    }
}

TEST(SwapChain, WernerFidelityStrictlyDecreasesWithL)
{
    for (double p : {0.5, 0.9, 0.99, 0.999}) {
        double prev = 2.0;
        // stop before p^L drops below the resolution of b1 near 1/4
        for (int l = 1; l <= 60 && 0.75 * std::pow(p, l) > 1e-14; ++l) {
            const double b1 = swap_chain(from_werner(WernerParam(p)), l).b1();
            EXPECT_LT(b1, prev) << "p=" << p << " L=" << l;
            prev = b1;
        }
    }
}
