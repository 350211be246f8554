#include "npp/bell_state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <iomanip>
#include <limits>

namespace npp
{

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

BellDiagonal::BellDiagonal(double b1, double b2, double b3, double b4)
    : BellDiagonal(std::array<double, 4>{b1, b2, b3, b4})
{
}

BellDiagonal::BellDiagonal(const std::array<double, 4>& b)
    : b_(b)
{
    double sum = 0.0;
    for (double& x : b_) {
        if (!std::isfinite(x) || x < -kProbabilityTolerance || x > 1.0 + kProbabilityTolerance)
            throw std::domain_error("Bell-diagonal weight out of range: " + to_string(*this));
        if (x < 0.0)
            x = 0.0;
        sum += x;
    }
    if (std::abs(sum - 1.0) > kProbabilityTolerance)
        throw std::domain_error("Bell-diagonal weights do not sum to 1: " + to_string(*this));
    // sums within a few ulps of one are kept bit-exact
    if (std::abs(sum - 1.0) > 8.0 * std::numeric_limits<double>::epsilon()) {
        for (double& x : b_)
            x /= sum;
    }
}

BellDiagonal
BellDiagonal::perfect()
{
    return BellDiagonal(1.0, 0.0, 0.0, 0.0);
}

BellDiagonal
BellDiagonal::maximally_mixed()
{
    return BellDiagonal(0.25, 0.25, 0.25, 0.25);
}

BellDiagonal
BellDiagonal::werner_with_fidelity(double b1)
{
    if (!(b1 >= 0.25 && b1 <= 1.0))
        throw std::domain_error("Werner fidelity must lie in [1/4, 1]");
    const double rest = (1.0 - b1) / 3.0;
    return BellDiagonal(b1, rest, rest, rest);
}

std::string
to_string(const BellDiagonal& s)
{
    std::ostringstream out;
    out << std::setprecision(17) << "(" << s[0] << ", " << s[1] << ", " << s[2] << ", " << s[3] << ")";
    return out.str();
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

WernerParam::WernerParam(double p)
    : p_(p)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("Werner parameter p must lie in [0, 1]");
}

double
WernerParam::fidelity() const
{
    return (3.0 * p_ + 1.0) / 4.0;
}

Robustness::Robustness(double r_param)
    : Robustness(r_param, 0.0)
{
    if (!(r_param >= 0.0 && r_param < 1.0))
        throw std::domain_error("robustness R must lie in [0, 1)");
    rapidity_ = std::atanh(r_param);
}

Robustness::Robustness(double r_param, double rapidity)
    : r_(r_param), rapidity_(rapidity)
{
}

Robustness
Robustness::from_rapidity(double rapidity)
{
    if (!(rapidity >= 0.0) || !std::isfinite(rapidity))
        throw std::domain_error("rapidity must be finite and non-negative");
    const double r = std::tanh(rapidity);
    if (r >= 1.0)
        throw std::domain_error("rapidity too large: robustness rounds to 1");
    return Robustness(r, rapidity);
}

Robustness
Robustness::from_fidelity(double b1)
{
    if (!(b1 >= 0.5 && b1 < 1.0))
        throw std::domain_error("QND fidelity must lie in [1/2, 1)");
    return Robustness(2.0 * b1 - 1.0);
}

double
Robustness::fidelity() const
{
    return (1.0 + r_) / 2.0;
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

BellDiagonal
from_werner(WernerParam p)
{
    const double noise = (1.0 - p.value()) / 4.0;
    return BellDiagonal(p.value() + noise, noise, noise, noise);
}

BellDiagonal
from_robustness(Robustness r)
{
    return BellDiagonal((1.0 + r.value()) / 2.0, (1.0 - r.value()) / 2.0, 0.0, 0.0);
}

WernerParam
to_werner(const BellDiagonal& state)
{
    const double p = (4.0 * state.b1() - 1.0) / 3.0;
    // tolerate rounding just outside [0,1]
    if (p < -kProbabilityTolerance || p > 1.0 + kProbabilityTolerance)
        throw std::domain_error("state has no Werner parameter in [0, 1]: " + to_string(state));
    return WernerParam(std::clamp(p, 0.0, 1.0));
}

double
entanglement_factor(WernerParam p)
{
    return (1.0 - 3.0 * p.value()) / 2.0;
}

double
bell_chsh_factor(WernerParam p)
{
    return 2.0 * std::numbers::sqrt2 * p.value();
}

} // namespace npp
