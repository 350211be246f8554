#pragma once

#include "npp/bell_state.hpp"
#include "npp/swap.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace npp
{

/// Thrown when post-selection can never succeed (zero normalization) or the
/// input rapidity is zero.
class PurificationImpossible : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMaxRounds = 64;

struct PurificationStep
{
    BellDiagonal state;
    /// Probability that the target measurements coincide.
    double success_probability;
};

/// One round of Deutsch (DEJMPS) purification on two pairs `a` and `b`.
PurificationStep deutsch_step(const BellDiagonal& a, const BellDiagonal& b);

struct PurificationResult
{
    int rounds = 0;
    BellDiagonal final_state = BellDiagonal::perfect();
    bool converged = false;
    /// One entry per performed round.
    std::vector<double> success_probs;
    /// b1 before the first round followed by b1 after each round.
    std::vector<double> b1_history;

    /// 2^rounds input pairs. Exact as a double for every reachable round count.
    double pairs() const;
};

/// Symmetric purification: every round consumes two copies of the current
/// state. Stops as soon as b1 >= target_b1. Reports non-convergence when b1
/// is at or below 1/2 or max_rounds is exhausted.
PurificationResult purify_to_target(const BellDiagonal& state, double target_b1, int max_rounds = kDefaultMaxRounds);

/// Continuous stand-in for log2 M along a converged run. The generalized
/// rapidity atanh(2 b1 - 1) is interpolated geometrically inside the last
/// round, which reproduces log2(r_target / r_start) exactly for QND states.
/// Zero when no round was needed; nullopt when the run did not converge.
std::optional<double> effective_rounds(const PurificationResult& result, double target_b1);

/// Pair-count estimate Int(arctanh R / arctanh R^E) + 1 for QND chains.
/// The Int is a floor, so exact integer ratios still receive the +1.
long long qnd_pairs_bound(Robustness r, int switchers, ChainConvention conv = ChainConvention::PaperL);

/// Smallest m with 2^m arctanh(R_long) >= arctanh(R_target).
int qnd_purify_closed(Robustness r_long, Robustness r_target);

} // namespace npp
