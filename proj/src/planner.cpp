#include "npp/planner.hpp"

#include "npp/purify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace npp
{

const char*
to_string(NoiseModel m)
{
    return m == NoiseModel::QND ? "qnd" : "werner";
}

const char*
to_string(GrowthClass g)
{
    switch (g) {
    case GrowthClass::Unavailable:      return "unavailable";
    case GrowthClass::Exponential:      return "exponential";
    case GrowthClass::SuperExponential: return "super_exponential";
    case GrowthClass::Diverged:         return "diverged";
    }
    return "unavailable";
}

NoiseModel
parse_noise_model(const std::string& s)
{
    if (s == "qnd")
        return NoiseModel::QND;
    if (s == "werner")
        return NoiseModel::Werner;
    throw std::invalid_argument("unknown noise model: " + s);
}

GrowthClass
parse_growth_class(const std::string& s)
{
    for (auto g : {GrowthClass::Unavailable, GrowthClass::Exponential,
                   GrowthClass::SuperExponential, GrowthClass::Diverged}) {
        if (s == to_string(g))
            return g;
    }
    throw std::invalid_argument("unknown growth class: " + s);
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

ResourceTotal
total_resources(double segments, int switchers, double pairs)
{
    if (!(segments >= 1.0) || !std::isfinite(segments))
        throw std::domain_error("segment count must be >= 1");
    if (switchers < 1)
        throw std::domain_error("switcher count must be >= 1 (logarithm base L+1 > 1)");
    if (!(pairs >= 1.0) || !std::isfinite(pairs))
        throw std::domain_error("pair count must be >= 1");

    const double exponent = std::log(pairs) / std::log(static_cast<double>(switchers) + 1.0) + 1.0;
    return {exponent, exponent * std::log(segments), std::pow(segments, exponent)};
}

double
l_max_werner(double working_b1)
{
    const double ln3 = std::log(3.0);
    if (!(working_b1 > 0.5 && working_b1 <= 1.0))
        throw std::domain_error("working fidelity must lie in (1/2, 1]");
    if (working_b1 == 1.0)
        return std::numeric_limits<double>::infinity();
    return ln3 / (ln3 - std::log(4.0 * working_b1 - 1.0));
}

double
onpp_restriction(double working_b1)
{
    if (!(working_b1 > 0.95 && working_b1 < 1.0))
        throw std::domain_error("switcher restriction holds only for working fidelity B1 in (0.95, 1)");
    return l_max_werner(working_b1) / 2.0;
}

int
admissible_switchers(double bound)
{
    if (!std::isfinite(bound) || bound > std::numeric_limits<int>::max())
        throw std::domain_error("switcher bound is unbounded");
    return std::max(0, static_cast<int>(std::ceil(bound)) - 1);
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

double
effective_log2_pairs(NoiseModel model, double chain_b1, double working_b1)
{
    if (chain_b1 >= working_b1)
        return 0.0;
    if (model == NoiseModel::QND) {
        if (chain_b1 <= 0.5)
            return 0.0;
        const double ratio = std::atanh(2.0 * working_b1 - 1.0) / std::atanh(2.0 * chain_b1 - 1.0);
        return std::max(0.0, std::log2(ratio));
    }
    const auto run = purify_to_target(BellDiagonal::werner_with_fidelity(chain_b1), working_b1);
    return effective_rounds(run, working_b1).value_or(0.0);
}

SweepPoint
evaluate_point(NoiseModel model, double working_b1, int switchers, ChainConvention conv)
{
    SweepPoint pt;
    pt.switchers = switchers;

    if (model == NoiseModel::QND) {
        const Robustness target = Robustness::from_fidelity(working_b1);
        if (target.value() <= 0.0)
            throw std::domain_error("QND working fidelity must exceed 1/2");
        const Robustness chain = chain_robustness(target, switchers, conv);
        pt.chain_b1 = chain.fidelity();
        if (chain.value() > 0.0) {
            pt.rounds = qnd_purify_closed(chain, target);
            pt.converged = true;
        }
    } else {
        if (!(working_b1 > 0.5 && working_b1 <= 1.0))
            throw std::domain_error("Werner working fidelity must lie in (1/2, 1]");
        pt.chain_b1 = chain_werner_fidelity(working_b1, switchers, conv);
        if (pt.chain_b1 >= working_b1) {
            pt.converged = true;
        } else {
            const auto run = purify_to_target(BellDiagonal::werner_with_fidelity(pt.chain_b1), working_b1);
            pt.rounds = run.rounds;
            pt.converged = run.converged;
        }
    }

    pt.pairs = std::ldexp(1.0, pt.rounds);
    if (pt.converged)
        pt.log2_pairs = effective_log2_pairs(model, pt.chain_b1, working_b1);
    return pt;
}

namespace
{

GrowthClass
classify_prefix(const std::vector<SweepPoint>& points, std::size_t end)
{
    if (end == 0)
        return GrowthClass::Unavailable;
    if (!points[end - 1].converged)
        return GrowthClass::Diverged;

    std::vector<const SweepPoint*> tail;
    for (std::size_t i = end; i-- > 0 && tail.size() < kGrowthWindow;) {
        if (points[i].converged)
            tail.push_back(&points[i]);
    }
    if (tail.size() < kGrowthMinPoints)
        return GrowthClass::Unavailable;
    std::reverse(tail.begin(), tail.end());

    // second differences on a possibly non-uniform grid
    double sum = 0.0;
    for (std::size_t i = 0; i + 2 < tail.size(); ++i) {
        const double l0 = tail[i]->switchers, l1 = tail[i + 1]->switchers, l2 = tail[i + 2]->switchers;
        const double s01 = (tail[i + 1]->log2_pairs - tail[i]->log2_pairs) / (l1 - l0);
        const double s12 = (tail[i + 2]->log2_pairs - tail[i + 1]->log2_pairs) / (l2 - l1);
        sum += (s12 - s01) / ((l2 - l0) / 2.0);
    }
    const double mean = sum / static_cast<double>(tail.size() - 2);
    return mean <= kGrowthThreshold ? GrowthClass::Exponential : GrowthClass::SuperExponential;
}

} // anon

GrowthClass
classify_growth(const SweepCurve& curve)
{
    const auto& pts = curve.points;
    if (!pts.empty() && !pts.back().converged)
        return GrowthClass::Diverged;
    const GrowthClass g = classify_prefix(pts, pts.size());
    if (g == GrowthClass::Unavailable)
        throw std::invalid_argument("growth classification needs at least 4 converged points");
    return g;
}

SweepCurve
sweep_m_of_l(NoiseModel model, double working_b1, const std::vector<int>& switchers, ChainConvention conv)
{
    if (switchers.empty())
        throw std::invalid_argument("switcher range is empty");
    if (!std::is_sorted(switchers.begin(), switchers.end(), std::less_equal<>()))
        throw std::invalid_argument("switcher range must be strictly increasing");

    SweepCurve curve{model, working_b1, conv, {}};
    curve.points.reserve(switchers.size());
    for (int l : switchers) {
        curve.points.push_back(evaluate_point(model, working_b1, l, conv));
        curve.points.back().growth_so_far = classify_prefix(curve.points, curve.points.size());
    }
    return curve;
}

std::vector<int>
switcher_range(int start, int end, int step)
{
    if (step < 1)
        throw std::invalid_argument("step must be >= 1");
    if (end < start)
        throw std::invalid_argument("empty switcher range");
    std::vector<int> out;
    for (long long l = start; l <= end; l += step)
        out.push_back(static_cast<int>(l));
    return out;
}

} // namespace npp
