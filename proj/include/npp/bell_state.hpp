#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace npp
{

/// Tolerance used for the probability-sum invariant of Bell-diagonal states.
inline constexpr double kProbabilityTolerance = 1e-12;

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

/// Two-qubit state diagonal in the Bell basis
///
///     |B1> = (|00> + |11>)/sqrt2,   |B2> = (|00> - |11>)/sqrt2,
///     |B3> = (|01> + |10>)/sqrt2,   |B4> = (|01> - |10>)/sqrt2.
///
/// Only the four fidelities b_k = <B_k|rho|B_k> are kept. Off-diagonal
/// Bell-basis elements never influence the swapping or purification maps,
/// so full matrices live only in the oracle.
class BellDiagonal
{
public:
    /// Validates and stores the weights. Components within the tolerance of
    /// zero are clamped and a sum within the tolerance of one is
    /// renormalized (left untouched when only a few ulps off); anything else
    /// throws std::domain_error.
    BellDiagonal(double b1, double b2, double b3, double b4);
    explicit BellDiagonal(const std::array<double, 4>& b);

    /// |B1><B1|
    static BellDiagonal perfect();
    /// identity / 4
    static BellDiagonal maximally_mixed();
    /// Werner-family state with the given B1 and b2 = b3 = b4 = (1-B1)/3.
    static BellDiagonal werner_with_fidelity(double b1);

    double b1() const { return b_[0]; }
    double b2() const { return b_[1]; }
    double b3() const { return b_[2]; }
    double b4() const { return b_[3]; }

    /// Zero-based access: operator[](0) is b1.
    double operator[](std::size_t k) const { return b_[k]; }
    const std::array<double, 4>& weights() const { return b_; }

    bool operator==(const BellDiagonal&) const = default;

private:
    std::array<double, 4> b_;
};

std::string to_string(const BellDiagonal&);

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

/// Werner mixing parameter p in rho = p|B1><B1| + (1-p)/4 * 1.
class WernerParam
{
public:
    explicit WernerParam(double p);

    double value() const { return p_; }
    /// B1 = (3p + 1)/4
    double fidelity() const;

private:
    double p_;
};

/// Robustness R against QND decoherence, with rapidity r = arctanh R.
class Robustness
{
public:
    /// R in [0, 1).
    explicit Robustness(double r_param);
    static Robustness from_rapidity(double rapidity);
    /// R = 2 B1 - 1 for B1 in [1/2, 1).
    static Robustness from_fidelity(double b1);

    double value() const { return r_; }
    double rapidity() const { return rapidity_; }
    /// B1 = (1 + R)/2
    double fidelity() const;

private:
    Robustness(double r_param, double rapidity);

    double r_;
    double rapidity_;
};

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

BellDiagonal from_werner(WernerParam p);
BellDiagonal from_robustness(Robustness r);

/// p = (4 b1 - 1)/3. Throws std::domain_error if b1 < 1/4.
WernerParam to_werner(const BellDiagonal& state);

/// Lambda = (1 - 3p)/2. Negative means entangled.
double entanglement_factor(WernerParam p);
/// Maximal CHSH value 2 sqrt2 p. Above 2 means nonlocal.
double bell_chsh_factor(WernerParam p);

} // namespace npp
