#include "npp/purify.hpp"

#include <cmath>

namespace npp
{

namespace
{

double
generalized_rapidity(double b1)
{
    return std::atanh(2.0 * b1 - 1.0);
}

} // anon

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

PurificationStep
deutsch_step(const BellDiagonal& a, const BellDiagonal& b)
{
    const double norm = (a[0] + a[3]) * (b[0] + b[3]) + (a[1] + a[2]) * (b[1] + b[2]);
    if (!(norm > 0.0))
        throw PurificationImpossible("coincidence probability is zero");

    BellDiagonal out((a[0]*b[0] + a[3]*b[3]) / norm,
                     (a[0]*b[3] + a[3]*b[0]) / norm,
                     (a[1]*b[1] + a[2]*b[2]) / norm,
                     (a[1]*b[2] + a[2]*b[1]) / norm);
    return {out, norm};
}

double
PurificationResult::pairs() const
{
    return std::ldexp(1.0, rounds);
}

PurificationResult
purify_to_target(const BellDiagonal& state, double target_b1, int max_rounds)
{
    if (!(target_b1 > 0.5 && target_b1 < 1.0))
        throw std::domain_error("target fidelity must lie in (1/2, 1)");
    if (max_rounds < 1)
        throw std::domain_error("max_rounds must be >= 1");

    PurificationResult res;
    res.final_state = state;
    res.b1_history.push_back(state.b1());

    while (res.final_state.b1() < target_b1) {
        if (res.final_state.b1() <= 0.5 || res.rounds >= max_rounds)
            return res;
        const auto step = deutsch_step(res.final_state, res.final_state);
        res.final_state = step.state;
        res.success_probs.push_back(step.success_probability);
        res.b1_history.push_back(step.state.b1());
        ++res.rounds;
    }
    res.converged = true;
    return res;
}

std::optional<double>
effective_rounds(const PurificationResult& result, double target_b1)
{
    if (!result.converged)
        return std::nullopt;
    if (result.rounds == 0)
        return 0.0;

    const auto m = static_cast<std::size_t>(result.rounds);
    const double before = generalized_rapidity(result.b1_history[m - 1]);
    const double after = generalized_rapidity(result.b1_history[m]);
    const double target = generalized_rapidity(target_b1);
    // b1_history[m-1] < target_b1 <= b1_history[m] and b1_history[m-1] > 1/2
    return static_cast<double>(m - 1) + std::log2(target / before) / std::log2(after / before);
}

long long
qnd_pairs_bound(Robustness r, int switchers, ChainConvention conv)
{
    if (r.value() <= 0.0)
        throw PurificationImpossible("zero robustness: purification cannot converge");
    const double r_long = std::pow(r.value(), chain_exponent(switchers, conv));
    if (r_long <= 0.0)
        throw PurificationImpossible("chain robustness underflows to zero");
    const double ratio = (std::log1p(r.value()) - std::log1p(-r.value()))
                       / (std::log1p(r_long) - std::log1p(-r_long));
    if (!(ratio < 9.0e18))
        throw std::overflow_error("pair bound exceeds the integer range");
    return static_cast<long long>(std::floor(ratio)) + 1;
}

int
qnd_purify_closed(Robustness r_long, Robustness r_target)
{
    if (r_long.rapidity() <= 0.0)
        throw PurificationImpossible("zero robustness: purification cannot converge");
    int m = 0;
    while (std::ldexp(r_long.rapidity(), m) < r_target.rapidity())
        ++m;
    return m;
}

} // namespace npp
