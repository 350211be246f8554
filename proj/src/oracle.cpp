#include "npp/oracle.hpp"

#include "npp/purify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace npp::oracle
{

namespace
{

using Matrix2 = Eigen::Matrix2cd;

constexpr Complex kI{0.0, 1.0};

Matrix2
pauli_x()
{
    Matrix2 m;
    m << 0, 1,
         1, 0;
    return m;
}

Matrix2
pauli_z()
{
    Matrix2 m;
    m << 1, 0,
         0, -1;
    return m;
}

// |0> -> (|0> - i|1>)/sqrt2, |1> -> (|1> - i|0>)/sqrt2
Matrix2
sender_rotation()
{
    Matrix2 m;
    m << 1.0, -kI,
         -kI, 1.0;
    return m / std::numbers::sqrt2;
}

// |0> -> (|0> + i|1>)/sqrt2, |1> -> (|1> + i|0>)/sqrt2
Matrix2
receiver_rotation()
{
    Matrix2 m;
    m << 1.0, kI,
         kI, 1.0;
    return m / std::numbers::sqrt2;
}

// C-NOT on a 4-qubit register as a permutation matrix.
Eigen::MatrixXcd
cnot4(int control, int target)
{
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(16, 16);
    for (int in = 0; in < 16; ++in) {
        const int cbit = (in >> (3 - control)) & 1;
        const int out = cbit ? in ^ (1 << (3 - target)) : in;
        u(out, in) = 1.0;
    }
    return u;
}

// Trace out the last two qubits of a 4-qubit operator.
Eigen::Matrix4cd
trace_last_pair(const Eigen::MatrixXcd& m)
{
    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j)
                out(i, k) += m(4 * i + j, 4 * k + j);
    return out;
}

// Trace out the middle two qubits of a 4-qubit operator (A, B1, B2, C).
Eigen::Matrix4cd
trace_middle_pair(const Eigen::MatrixXcd& m)
{
    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c)
    for (int a2 = 0; a2 < 2; ++a2)
    for (int c2 = 0; c2 < 2; ++c2)
        for (int mid = 0; mid < 4; ++mid)
            out(2 * a + c, 2 * a2 + c2) += m(8 * a + 2 * mid + c, 8 * a2 + 2 * mid + c2);
    return out;
}

double
unit_uniform(std::mt19937_64& rng)
{
    // 53 random mantissa bits, shifted into (0, 1]
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

} // anon

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m)
    : m_(std::move(m))
{
    if (m_.rows() != m_.cols() || (m_.rows() != 4 && m_.rows() != 16))
        throw std::domain_error("density matrix must be 4x4 or 16x16");
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance)
        throw std::domain_error("density matrix is not Hermitian");
    const Complex tr = m_.trace();
    if (std::abs(tr.real() - 1.0) > kTraceTolerance || std::abs(tr.imag()) > kTraceTolerance)
        throw std::domain_error("density matrix trace differs from 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m_, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -kEigenvalueTolerance)
        throw std::domain_error("density matrix has a negative eigenvalue");
}

Eigen::MatrixXcd
kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b)
{
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Eigen::Vector4cd
bell_vector(int k)
{
    const double h = 1.0 / std::numbers::sqrt2;
    Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
    switch (k) {
    case 1: v(0) = h; v(3) = h;  break;
    case 2: v(0) = h; v(3) = -h; break;
    case 3: v(1) = h; v(2) = h;  break;
    case 4: v(1) = h; v(2) = -h; break;
    default:
        throw std::out_of_range("Bell index must be 1..4");
    }
    return v;
}

std::array<Eigen::Vector4cd, 4>
bell_basis()
{
    return {bell_vector(1), bell_vector(2), bell_vector(3), bell_vector(4)};
}

DensityMatrix
bell_projector(int k)
{
    const Eigen::Vector4cd v = bell_vector(k);
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix
to_density_matrix(const BellDiagonal& state)
{
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    const auto basis = bell_basis();
    for (int k = 0; k < 4; ++k)
        m += state[k] * basis[k] * basis[k].adjoint();
    return DensityMatrix(std::move(m));
}

Eigen::Matrix4cd
bell_basis_elements(const DensityMatrix& rho)
{
    if (rho.dim() != 4)
        throw std::domain_error("Bell-basis elements need a two-qubit state");
    Eigen::Matrix4cd change;
    const auto basis = bell_basis();
    for (int k = 0; k < 4; ++k)
        change.col(k) = basis[k];
    return change.adjoint() * rho.matrix() * change;
}

BellDiagonal
bell_diagonal_of(const DensityMatrix& rho)
{
    const Eigen::Matrix4cd b = bell_basis_elements(rho);
    return BellDiagonal(b(0, 0).real(), b(1, 1).real(), b(2, 2).real(), b(3, 3).real());
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

DeutschOutcome
deutsch_protocol_dm(const DensityMatrix& rho_a, const DensityMatrix& rho_b)
{
    if (rho_a.dim() != 4 || rho_b.dim() != 4)
        throw std::domain_error("purification acts on two-qubit states");

    // register (Sa, Ra, Sb, Rb)
    Eigen::MatrixXcd rho = kron(rho_a.matrix(), rho_b.matrix());

    const Eigen::MatrixXcd local = kron(kron(sender_rotation(), receiver_rotation()),
                                        kron(sender_rotation(), receiver_rotation()));
    const Eigen::MatrixXcd cnots = cnot4(1, 3) * cnot4(0, 2);
    const Eigen::MatrixXcd u = cnots * local;
    rho = u * rho * u.adjoint();

    Eigen::Matrix4cd kept = Eigen::Matrix4cd::Zero();
    for (int outcome = 0; outcome < 2; ++outcome) {
        Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(16, 16);
        for (int ctrl = 0; ctrl < 4; ++ctrl) {
            const int idx = 4 * ctrl + (outcome ? 3 : 0);
            proj(idx, idx) = 1.0;
        }
        kept += trace_last_pair(proj * rho * proj);
    }

    const double prob = kept.trace().real();
    if (!(prob > 0.0))
        throw PurificationImpossible("coincidence probability is zero");
    return {DensityMatrix(kept / prob), prob};
}

DensityMatrix
swap_dm(const DensityMatrix& rho_ab, const DensityMatrix& rho_bc)
{
    if (rho_ab.dim() != 4 || rho_bc.dim() != 4)
        throw std::domain_error("swapping acts on two-qubit states");

    // register (A, B1, B2, C)
    const Eigen::MatrixXcd rho = kron(rho_ab.matrix(), rho_bc.matrix());
    const Eigen::MatrixXcd id2 = Eigen::Matrix2cd::Identity();

    // maps the ideal outcome-k state on (A,C) back to |B1>
    const std::array<Matrix2, 4> correction{
        Matrix2(Matrix2::Identity()),
        pauli_z(),
        pauli_x(),
        pauli_z() * pauli_x(),
    };

    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    for (int k = 1; k <= 4; ++k) {
        const Eigen::Vector4cd v = bell_vector(k);
        const Eigen::MatrixXcd proj = kron(id2, kron(v * v.adjoint(), id2));
        const Eigen::Matrix4cd branch = trace_middle_pair(proj * rho * proj);
        const Eigen::Matrix4cd fix = kron(id2, correction[k - 1]);
        out += fix * branch * fix.adjoint();
    }
    return DensityMatrix(out);
}

DensityMatrix
qnd_channel_dm(const DensityMatrix& rho, double r_param)
{
    if (rho.dim() != 4)
        throw std::domain_error("QND channel acts on two-qubit states");
    if (!(r_param >= 0.0 && r_param <= 1.0))
        throw std::domain_error("robustness must lie in [0, 1]");

    // Kraus operators <0|_E V and <1|_E V
    Eigen::Matrix4cd k0 = Eigen::Matrix4cd::Identity();
    k0(3, 3) = r_param;
    Eigen::Matrix4cd k1 = Eigen::Matrix4cd::Zero();
    k1(3, 3) = std::sqrt(1.0 - r_param * r_param);

    const Eigen::Matrix4cd m = rho.matrix();
    return DensityMatrix(k0 * m * k0.adjoint() + k1 * m * k1.adjoint());
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

BellDiagonal
random_bell_diagonal(std::mt19937_64& rng)
{
    std::array<double, 4> w;
    double sum = 0.0;
    for (double& x : w) {
        x = -std::log(unit_uniform(rng));
        sum += x;
    }
    for (double& x : w)
        x /= sum;
    return BellDiagonal(w);
}

} // namespace npp::oracle
