#include "cli.hpp"

#include "npp/oracle.hpp"
#include "npp/purify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace npp::cli
{

namespace
{

/// Raised for bad flag combinations detected after CLI11 parsing.
struct UsageError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

double
parse_double(const std::string& s)
{
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
        throw std::runtime_error("not a number: '" + s + "'");
    return x;
}

long long
parse_integer(const std::string& s)
{
    char* end = nullptr;
    const long long x = std::strtoll(s.c_str(), &end, 10);
    if (s.empty() || end != s.c_str() + s.size())
        throw std::runtime_error("not an integer: '" + s + "'");
    return x;
}

std::vector<std::string>
split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        parts.push_back(cur);
    if (!s.empty() && s.back() == sep)
        parts.emplace_back();
    return parts;
}

ChainConvention
parse_convention(const std::string& s)
{
    if (s == "paper")
        return ChainConvention::PaperL;
    if (s == "strict")
        return ChainConvention::StrictChainLPlus1;
    throw std::runtime_error("unknown convention: " + s);
}

/// Fidelity inputs shared by several subcommands; at most one may be set.
struct FidelityFlags
{
    std::optional<double> b1;
    std::optional<double> r;
    std::optional<double> p;

    void
    attach(CLI::App* cmd)
    {
        auto* ob = cmd->add_option("--b1", b1, "working fidelity B1");
        auto* orr = cmd->add_option("--r", r, "QND robustness R (qnd model)");
        auto* op = cmd->add_option("--p", p, "Werner parameter p (werner model)");
        ob->excludes(orr)->excludes(op);
        orr->excludes(op);
    }

    bool given() const { return b1 || r || p; }

    /// Returns (param name, native value, working B1).
    std::tuple<std::string, double, double>
    resolve(NoiseModel model) const
    {
        if (r) {
            if (model != NoiseModel::QND)
                throw UsageError("--r applies to the qnd model only");
            return {"r", *r, Robustness(*r).fidelity()};
        }
        if (p) {
            if (model != NoiseModel::Werner)
                throw UsageError("--p applies to the werner model only");
            return {"p", *p, WernerParam(*p).fidelity()};
        }
        if (b1)
            return {"b1", *b1, *b1};
        throw UsageError("one of --b1, --r, --p is required");
    }
};

const char*
verdict(double value, double threshold, bool above_means_yes)
{
    if (std::abs(value - threshold) <= 1e-12)
        return "threshold";
    return (value > threshold) == above_means_yes ? "yes" : "no";
}

std::string
format_sci(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

struct SweepArgs
{
    std::string model;
    FidelityFlags fid;
    std::string range;
    int step = 1;
    std::string convention = "paper";
    std::string format = "csv";
    std::string output = "-";
};

int
cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err)
{
    SweepHeader header;
    header.model = parse_noise_model(a.model);
    header.convention = parse_convention(a.convention);
    std::tie(header.param_name, header.param_value, header.working_b1) = a.fid.resolve(header.model);

    const auto [first, last] = parse_switcher_range(a.range);
    const auto curve = sweep_m_of_l(header.model, header.working_b1,
                                    switcher_range(first, last, a.step), header.convention);

    std::ostringstream buf;
    if (a.format == "json")
        write_sweep_json(buf, header, curve);
    else
        write_sweep_csv(buf, header, curve);

    if (a.output == "-") {
        out << buf.str();
        return kSuccess;
    }
    std::ofstream file(a.output, std::ios::binary);
    if (!file || !(file << buf.str()) || !file.flush()) {
        err << "error: cannot write output file '" << a.output << "'\n";
        return kUsageError;
    }
    return kSuccess;
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

struct PlanArgs
{
    long long segments = 0;
    std::string model = "werner";
    FidelityFlags fid;
    std::optional<int> switchers;
    std::optional<double> pairs;
    std::string convention = "paper";
};

int
cmd_plan(const PlanArgs& a, std::ostream& out, std::ostream& err)
{
    const NoiseModel model = parse_noise_model(a.model);
    const ChainConvention conv = parse_convention(a.convention);

    if (!a.fid.given() && !(a.switchers && a.pairs))
        throw UsageError("a working fidelity is required unless both --l and --pairs are given");

    out << "segments=" << a.segments << " model=" << to_string(model)
        << " convention=" << to_string(conv) << "\n";

    std::optional<double> working_b1;
    std::optional<double> bound;
    if (a.fid.given()) {
        const auto [name, value, b1] = a.fid.resolve(model);
        if (!(b1 > 0.5 && b1 < 1.0))
            throw UsageError("working fidelity must lie in (1/2, 1)");
        working_b1 = b1;
        out << "working_b1=" << format_double(b1) << " (" << name << "=" << format_double(value) << ")\n";

        const double l_max = l_max_werner(b1);
        out << "l_max=" << format_double(l_max) << " l_max_floor=" << static_cast<long long>(std::floor(l_max)) << "\n";
        if (b1 > 0.95) {
            bound = onpp_restriction(b1);
        } else {
            err << "warning: working fidelity " << format_double(b1)
                << " is not above 0.95; the switcher restriction is outside its validity range\n";
            bound = l_max / 2.0;
        }
        out << "onpp_bound=" << format_double(*bound) << "\n";
    }

    const int switchers = a.switchers ? *a.switchers : std::max(1, admissible_switchers(*bound));
    if (switchers < 1)
        throw UsageError("--l must be >= 1");
    out << "switchers=" << switchers << "\n";

    double pairs = 0.0;
    if (a.pairs) {
        pairs = *a.pairs;
        out << "pairs=" << format_double(pairs) << " (given)\n";
    } else {
        const SweepPoint pt = evaluate_point(model, *working_b1, switchers, conv);
        out << "chain_b1=" << format_double(pt.chain_b1) << "\n";
        if (!pt.converged) {
            out << "pairs=diverged\n";
            return kSuccess;
        }
        pairs = pt.pairs;
        out << "rounds=" << pt.rounds << " pairs=" << format_double(pairs) << "\n";
        if (model == NoiseModel::QND)
            out << "pairs_bound=" << qnd_pairs_bound(Robustness::from_fidelity(*working_b1), switchers, conv) << "\n";
    }

    const ResourceTotal total = total_resources(static_cast<double>(a.segments), switchers, pairs);
    out << "total_resources=" << format_double(total.value)
        << " exponent=" << format_double(total.exponent)
        << " log10_total=" << format_double(total.log_total / std::log(10.0)) << "\n";
    return kSuccess;
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

struct VerifyArgs
{
    int trials = 1000;
    std::uint64_t seed = 42;
    double tolerance = 1e-10;
};

struct Deviation
{
    double value = 0.0;
    int trial = -1;
};

int
cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream&)
{
    std::mt19937_64 rng(a.seed);
    Deviation swap_dev, purify_dev, prob_dev;
    std::vector<std::string> offenders;

    auto track = [](Deviation& d, double v, int t) {
        if (v > d.value)
            d = {v, t};
    };

    for (int t = 0; t < a.trials; ++t) {
        const BellDiagonal x = oracle::random_bell_diagonal(rng);
        const BellDiagonal y = oracle::random_bell_diagonal(rng);
        const auto rx = oracle::to_density_matrix(x);
        const auto ry = oracle::to_density_matrix(y);

        const BellDiagonal fast_swap = swap_pair(x, y);
        const BellDiagonal dm_swap = oracle::bell_diagonal_of(oracle::swap_dm(rx, ry));
        const auto fast_pur = deutsch_step(x, y);
        const auto dm_pur = oracle::deutsch_protocol_dm(rx, ry);
        const BellDiagonal dm_pur_diag = oracle::bell_diagonal_of(dm_pur.state);

        double sd = 0.0, pd = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            sd = std::max(sd, std::abs(fast_swap[k] - dm_swap[k]));
            pd = std::max(pd, std::abs(fast_pur.state[k] - dm_pur_diag[k]));
        }
        const double nd = std::abs(fast_pur.success_probability - dm_pur.success_probability);
        track(swap_dev, sd, t);
        track(purify_dev, pd, t);
        track(prob_dev, nd, t);

        if (std::max({sd, pd, nd}) > a.tolerance)
            offenders.push_back("trial " + std::to_string(t) + ": a=" + to_string(x) + " b=" + to_string(y));
    }

    out << "verify seed=" << a.seed << " trials=" << a.trials << " tolerance=" << format_sci(a.tolerance) << "\n";
    out << "swap_max_deviation=" << format_sci(swap_dev.value) << " (trial " << swap_dev.trial << ")\n";
    out << "purify_max_deviation=" << format_sci(purify_dev.value) << " (trial " << purify_dev.trial << ")\n";
    out << "success_prob_max_deviation=" << format_sci(prob_dev.value) << " (trial " << prob_dev.trial << ")\n";
    if (offenders.empty()) {
        out << "result=pass\n";
        return kSuccess;
    }
    out << "result=fail offending=" << offenders.size() << "\n";
    for (const auto& o : offenders)
        out << "  " << o << "\n";
    return kVerificationFailed;
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

struct DiagnoseArgs
{
    std::optional<double> p;
    std::optional<std::string> state;
};

int
cmd_diagnose(const DiagnoseArgs& a, std::ostream& out, std::ostream&)
{
    if (!a.p && !a.state)
        throw UsageError("one of --p, --state is required");

    std::optional<BellDiagonal> state;
    if (a.p) {
        state = from_werner(WernerParam(*a.p));
    } else {
        const auto parts = split(*a.state, ',');
        if (parts.size() != 4)
            throw UsageError("--state expects four comma-separated weights b1,b2,b3,b4");
        std::array<double, 4> w;
        for (std::size_t k = 0; k < 4; ++k)
            w[k] = parse_double(parts[k]);
        state = BellDiagonal(w);
    }

    out << "state=" << to_string(*state) << "\n";
    const auto& w = state->weights();
    // Bell-diagonal states are entangled iff some weight exceeds 1/2
    const double max_weight = *std::max_element(w.begin(), w.end());

    if (state->b1() >= 0.25) {
        const WernerParam p = a.p ? WernerParam(*a.p) : to_werner(*state);
        const double lambda = entanglement_factor(p);
        const double chsh = bell_chsh_factor(p);
        out << "werner_p=" << format_double(p.value()) << (a.p ? "" : " (werner twirl)") << "\n";
        out << "entanglement_factor=" << format_double(lambda) << "\n";
        out << "bell_factor=" << format_double(chsh) << "\n";
        if (a.p)
            out << "entangled=" << verdict(lambda, 0.0, false) << "\n";
        else
            out << "entangled=" << verdict(max_weight, 0.5, true) << "\n";
        out << "nonlocal=" << verdict(chsh, 2.0, true) << "\n";
    } else {
        out << "werner_p=none (b1 < 1/4)\n";
        out << "entangled=" << verdict(max_weight, 0.5, true) << "\n";
    }
    out << "purifiable=" << (state->b1() > 0.5 ? "yes" : "no") << "\n";
    return kSuccess;
}

} // anon

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

std::string
format_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void
write_sweep_csv(std::ostream& out, const SweepHeader& h, const SweepCurve& curve)
{
    out << "# model=" << to_string(h.model)
        << " param=" << h.param_name << ":" << format_double(h.param_value)
        << " working_b1=" << format_double(h.working_b1)
        << " convention=" << to_string(h.convention) << "\n";
    out << "L,chain_b1,m,M,converged,growth_class\n";
    for (const auto& pt : curve.points) {
        out << pt.switchers << ","
            << format_double(pt.chain_b1) << ","
            << pt.rounds << ","
            << format_double(pt.pairs) << ","
            << (pt.converged ? "true" : "false") << ","
            << to_string(pt.growth_so_far) << "\n";
    }
}

void
write_sweep_json(std::ostream& out, const SweepHeader& h, const SweepCurve& curve)
{
    using nlohmann::json;
    json doc;
    doc["model"] = to_string(h.model);
    doc["param"] = {{"name", h.param_name}, {"value", h.param_value}};
    doc["working_b1"] = h.working_b1;
    doc["convention"] = to_string(h.convention);

    json pts = json::array();
    for (const auto& pt : curve.points) {
        json j{
            {"L", pt.switchers},
            {"chain_b1", pt.chain_b1},
            {"m", pt.rounds},
            {"M", pt.pairs},
            {"converged", pt.converged},
            {"growth_class", to_string(pt.growth_so_far)},
            {"log2_M_effective", pt.log2_pairs},
        };
        if (h.model == NoiseModel::QND && pt.converged)
            j["M_bound"] = qnd_pairs_bound(Robustness::from_fidelity(h.working_b1), pt.switchers, h.convention);
        pts.push_back(std::move(j));
    }
    doc["points"] = std::move(pts);
    doc["growth_class"] = curve.points.empty() ? "unavailable" : to_string(curve.points.back().growth_so_far);
    out << doc.dump(2) << "\n";
}

std::pair<SweepHeader, SweepCurve>
read_sweep_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
        throw std::runtime_error("sweep CSV: missing metadata line");

    SweepHeader h;
    bool seen_model = false, seen_param = false, seen_b1 = false, seen_conv = false;
    for (const auto& field : split(line.substr(2), ' ')) {
        const auto eq = field.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("sweep CSV: bad metadata field '" + field + "'");
        const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "model") {
            h.model = parse_noise_model(value);
            seen_model = true;
        } else if (key == "param") {
            const auto colon = value.find(':');
            if (colon == std::string::npos)
                throw std::runtime_error("sweep CSV: bad param field");
            h.param_name = value.substr(0, colon);
            h.param_value = parse_double(value.substr(colon + 1));
            seen_param = true;
        } else if (key == "working_b1") {
            h.working_b1 = parse_double(value);
            seen_b1 = true;
        } else if (key == "convention") {
            h.convention = parse_convention(value);
            seen_conv = true;
        } else {
            throw std::runtime_error("sweep CSV: unknown metadata key '" + key + "'");
        }
    }
    if (!(seen_model && seen_param && seen_b1 && seen_conv))
        throw std::runtime_error("sweep CSV: incomplete metadata line");

    if (!std::getline(in, line) || line != "L,chain_b1,m,M,converged,growth_class")
        throw std::runtime_error("sweep CSV: missing column header");

    SweepCurve curve{h.model, h.working_b1, h.convention, {}};
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto cols = split(line, ',');
        if (cols.size() != 6)
            throw std::runtime_error("sweep CSV: expected 6 columns in '" + line + "'");
        SweepPoint pt;
        pt.switchers = static_cast<int>(parse_integer(cols[0]));
        pt.chain_b1 = parse_double(cols[1]);
        pt.rounds = static_cast<int>(parse_integer(cols[2]));
        pt.pairs = parse_double(cols[3]);
        if (cols[4] != "true" && cols[4] != "false")
            throw std::runtime_error("sweep CSV: bad converged flag '" + cols[4] + "'");
        pt.converged = cols[4] == "true";
        pt.growth_so_far = parse_growth_class(cols[5]);
        if (pt.converged)
            pt.log2_pairs = effective_log2_pairs(h.model, pt.chain_b1, h.working_b1);
        curve.points.push_back(pt);
    }
    return {h, curve};
}

std::pair<int, int>
parse_switcher_range(const std::string& text)
{
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const auto l = static_cast<int>(parse_integer(text));
            return {l, l};
        }
        return {static_cast<int>(parse_integer(text.substr(0, dots))),
                static_cast<int>(parse_integer(text.substr(dots + 2)))};
    } catch (const std::runtime_error&) {
        throw UsageError("switcher range must look like 1..80");
    }
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

int
run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Entanglement-resource costs of one nested purification segment"};
    app.name("npp");
    app.require_subcommand(1);

    const std::vector<std::string> models{"qnd", "werner"};
    const std::vector<std::string> conventions{"paper", "strict"};

    SweepArgs sweep;
    auto* sw = app.add_subcommand("sweep", "pairs M needed per switcher count L, as CSV or JSON");
    sw->add_option("--model", sweep.model, "noise model")->required()->check(CLI::IsMember(models));
    sweep.fid.attach(sw);
    sw->add_option("--l", sweep.range, "switcher range, e.g. 1..80")->required();
    sw->add_option("--step", sweep.step, "switcher step")->check(CLI::PositiveNumber);
    sw->add_option("--convention", sweep.convention, "chain exponent convention")->check(CLI::IsMember(conventions));
    sw->add_option("--format", sweep.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sw->add_option("--out", sweep.output, "output file, '-' for stdout");

    PlanArgs plan;
    auto* pl = app.add_subcommand("plan", "switcher cap, pairs per level and total resources");
    pl->add_option("--segments", plan.segments, "number of elementary segments N")->required()->check(CLI::Range(2LL, 1LL << 53));
    pl->add_option("--model", plan.model, "noise model")->check(CLI::IsMember(models));
    plan.fid.attach(pl);
    pl->add_option("--l", plan.switchers, "override the switcher count");
    pl->add_option("--pairs", plan.pairs, "override the pairs per level M")->check(CLI::Range(1.0, 1e300));
    pl->add_option("--convention", plan.convention, "chain exponent convention")->check(CLI::IsMember(conventions));

    VerifyArgs verify;
    auto* ve = app.add_subcommand("verify", "compare closed-form maps against the density-matrix oracle");
    ve->add_option("--trials", verify.trials, "random state pairs")->check(CLI::PositiveNumber);
    ve->add_option("--seed", verify.seed, "RNG seed");
    ve->add_option("--tolerance", verify.tolerance, "maximal accepted deviation")->check(CLI::NonNegativeNumber);

    DiagnoseArgs diag;
    auto* di = app.add_subcommand("diagnose", "entanglement and nonlocality of a state");
    auto* dp = di->add_option("--p", diag.p, "Werner parameter");
    auto* ds = di->add_option("--state", diag.state, "Bell-diagonal weights b1,b2,b3,b4");
    dp->excludes(ds);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // help output goes to `out`, errors to `err`
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*sw)
            return cmd_sweep(sweep, out, err);
        if (*pl)
            return cmd_plan(plan, out, err);
        if (*ve)
            return cmd_verify(verify, out, err);
        return cmd_diagnose(diag, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

} // namespace npp::cli
