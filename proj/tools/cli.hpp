#pragma once

#include "npp/planner.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace npp::cli
{

enum ExitCode
{
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
};

/// Metadata line of a sweep CSV:
/// `# model=<m> param=<name>:<v> working_b1=<f> convention=<c>`
struct SweepHeader
{
    NoiseModel model = NoiseModel::Werner;
    std::string param_name;   // "b1", "r" or "p"
    double param_value = 0.0;
    double working_b1 = 0.0;
    ChainConvention convention = ChainConvention::PaperL;

    bool operator==(const SweepHeader&) const = default;
};

/// Formats with 17 significant digits, enough to round-trip any double.
std::string format_double(double x);

void write_sweep_csv(std::ostream& out, const SweepHeader& header, const SweepCurve& curve);
void write_sweep_json(std::ostream& out, const SweepHeader& header, const SweepCurve& curve);

/// Rebuilds header and curve from CSV text. The continuous log2 M column is
/// not stored; it is recomputed from chain_b1. Throws std::runtime_error on
/// malformed input.
std::pair<SweepHeader, SweepCurve> read_sweep_csv(std::istream& in);

/// Parses "a..b" or a single integer into an inclusive range.
std::pair<int, int> parse_switcher_range(const std::string& text);

/// Entry point shared by the binary and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace npp::cli
