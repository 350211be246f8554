#include "npp/swap.hpp"

#include <cmath>
#include <stdexcept>

namespace npp
{

const char*
to_string(ChainConvention conv)
{
    return conv == ChainConvention::PaperL ? "paper" : "strict";
}

int
chain_exponent(int switchers, ChainConvention conv)
{
    if (conv == ChainConvention::PaperL) {
        if (switchers < 1)
            throw std::domain_error("switcher count must be >= 1 under the paper convention");
        return switchers;
    }
    if (switchers < 0)
        throw std::domain_error("switcher count must be >= 0");
    return switchers + 1;
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

BellDiagonal
swap_pair(const BellDiagonal& a, const BellDiagonal& b)
{
    return BellDiagonal(
        a[0]*b[0] + a[1]*b[1] + a[2]*b[2] + a[3]*b[3],
        a[0]*b[1] + a[1]*b[0] + a[2]*b[3] + a[3]*b[2],
        a[0]*b[2] + a[2]*b[0] + a[1]*b[3] + a[3]*b[1],
        a[0]*b[3] + a[3]*b[0] + a[1]*b[2] + a[2]*b[1]);
}

Robustness
swap_qnd(Robustness a, Robustness b)
{
    return Robustness(a.value() * b.value());
}

Robustness
chain_robustness(Robustness r, int switchers, ChainConvention conv)
{
    return Robustness(std::pow(r.value(), chain_exponent(switchers, conv)));
}

double
chain_werner_fidelity(double b1, int switchers, ChainConvention conv)
{
    if (!(b1 >= 0.25 && b1 <= 1.0))
        throw std::domain_error("Werner fidelity must lie in [1/4, 1]");
    const double p = (4.0 * b1 - 1.0) / 3.0;
    return 0.75 * std::pow(p, chain_exponent(switchers, conv)) + 0.25;
}

BellDiagonal
swap_chain(const BellDiagonal& state, int switchers, ChainConvention conv)
{
    const int copies = chain_exponent(switchers, conv);
    BellDiagonal out = state;
    for (int i = 1; i < copies; ++i)
        out = swap_pair(out, state);
    return out;
}

} // namespace npp
