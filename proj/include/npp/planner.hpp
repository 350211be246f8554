#pragma once

#include "npp/bell_state.hpp"
#include "npp/swap.hpp"

#include <string>
#include <vector>

namespace npp
{

enum class NoiseModel
{
    QND,
    Werner,
};

enum class GrowthClass
{
    Unavailable,
    Exponential,
    SuperExponential,
    Diverged,
};

const char* to_string(NoiseModel);
const char* to_string(GrowthClass);
NoiseModel parse_noise_model(const std::string&);
GrowthClass parse_growth_class(const std::string&);

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

/// Elementary-pair count N^(log_{L+1} M + 1) for N segments. The exponent and
/// the natural log of the total are kept so huge totals stay usable.
struct ResourceTotal
{
    double exponent;
    double log_total;
    /// pow(N, exponent); +inf once the total leaves the double range.
    double value;
};

ResourceTotal total_resources(double segments, int switchers, double pairs);

/// Largest real switcher count for which a Werner chain stays entangled
/// (chain B1 > 1/2): ln 3 / (ln 3 - ln(4 B1 - 1)).
double l_max_werner(double working_b1);

/// Half of l_max_werner, the switcher cap that avoids super-exponential
/// pair overhead. Valid only for working_b1 in (0.95, 1).
double onpp_restriction(double working_b1);

/// Largest integer strictly below a real switcher bound (at least 0).
int admissible_switchers(double bound);

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

struct SweepPoint
{
    int switchers = 0;
    double chain_b1 = 0.0;
    int rounds = 0;
    double pairs = 1.0;
    bool converged = false;
    /// Continuous log2 M used for growth classification; 0 when not converged.
    double log2_pairs = 0.0;
    GrowthClass growth_so_far = GrowthClass::Unavailable;

    bool operator==(const SweepPoint&) const = default;
};

struct SweepCurve
{
    NoiseModel model = NoiseModel::Werner;
    double working_b1 = 0.0;
    ChainConvention convention = ChainConvention::PaperL;
    std::vector<SweepPoint> points;

    bool operator==(const SweepCurve&) const = default;
};

/// Mean second difference of log2 M over the trailing window. Values at or
/// below kGrowthThreshold count as exponential growth.
inline constexpr int kGrowthWindow = 5;
inline constexpr int kGrowthMinPoints = 4;
inline constexpr double kGrowthThreshold = 0.05;

/// Continuous log2 M for a converged chain output: log2 of the rapidity
/// ratio for QND, the interpolated purification round count for Werner.
double effective_log2_pairs(NoiseModel model, double chain_b1, double working_b1);

/// One sweep point without growth classification. QND points use the
/// rapidity closed form, Werner points iterate the purification map.
SweepPoint evaluate_point(NoiseModel model, double working_b1, int switchers, ChainConvention conv);

/// Classifies the whole curve. Diverged when the last point failed to
/// converge; otherwise based on the trailing converged points. Throws
/// std::invalid_argument with fewer than kGrowthMinPoints converged points.
GrowthClass classify_growth(const SweepCurve& curve);

/// Evaluates every switcher count in `switchers` (strictly increasing) and
/// fills growth_so_far for each prefix.
SweepCurve sweep_m_of_l(NoiseModel model, double working_b1, const std::vector<int>& switchers,
                        ChainConvention conv = ChainConvention::PaperL);

/// start, start+step, ..., <= end
std::vector<int> switcher_range(int start, int end, int step = 1);

} // namespace npp
