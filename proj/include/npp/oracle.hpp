#pragma once

// Brute-force density-matrix versions of the swapping and purification
// protocols. Everything here is dense and small (4x4 or 16x16) and exists to
// check the closed-form maps in swap.hpp and purify.hpp.
//
// Qubit layout: computational basis index |q0 q1 ...> with q0 the most
// significant bit. Within a pair the sender qubit comes first; in a
// two-pair register pair a precedes pair b.

#include "npp/bell_state.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <random>

namespace npp::oracle
{

using Complex = std::complex<double>;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kEigenvalueTolerance = 1e-10;

/// Hermitian, unit-trace, positive semidefinite matrix of dimension 4 or 16.
class DensityMatrix
{
public:
    /// Throws std::domain_error if any invariant is violated.
    explicit DensityMatrix(Eigen::MatrixXcd m);

    Eigen::Index dim() const { return m_.rows(); }
    const Eigen::MatrixXcd& matrix() const { return m_; }
    Complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

private:
    Eigen::MatrixXcd m_;
};

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

/// |B_k> for k in {1,2,3,4}.
Eigen::Vector4cd bell_vector(int k);
std::array<Eigen::Vector4cd, 4> bell_basis();

DensityMatrix bell_projector(int k);
DensityMatrix to_density_matrix(const BellDiagonal& state);

/// Full matrix of Bell-basis elements B_{k,l} = <B_k|rho|B_l> (zero-based).
Eigen::Matrix4cd bell_basis_elements(const DensityMatrix& rho);
/// Diagonal of bell_basis_elements as a BellDiagonal.
BellDiagonal bell_diagonal_of(const DensityMatrix& rho);

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

struct DeutschOutcome
{
    DensityMatrix state;
    double success_probability;
};

/// Rotations on every sender and receiver qubit, bilateral C-NOT with pair a
/// as control, coincidence post-selection on the pair-b qubits. Throws
/// PurificationImpossible when coincidences have zero probability.
DeutschOutcome deutsch_protocol_dm(const DensityMatrix& rho_a, const DensityMatrix& rho_b);

/// Bell measurement on the inner qubits of (A,B1) and (B2,C), Pauli
/// correction on C for each outcome, mixture over the four outcomes.
DensityMatrix swap_dm(const DensityMatrix& rho_ab, const DensityMatrix& rho_bc);

/// QND monitoring of |00> and |11> with an environment qubit attached to the
/// pair: |11>|0>_E -> |11>(R|0>_E + sqrt(1-R^2)|1>_E), the other basis
/// states untouched. The environment is traced out. R in [0, 1].
DensityMatrix qnd_channel_dm(const DensityMatrix& rho, double r_param);

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

/// Uniform draw from the probability simplex (flat Dirichlet). Uses only
/// the raw engine output so streams are identical across standard libraries.
BellDiagonal random_bell_diagonal(std::mt19937_64& rng);

} // namespace npp::oracle
