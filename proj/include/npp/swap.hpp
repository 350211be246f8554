#pragma once

#include "npp/bell_state.hpp"

namespace npp
{

/// How the number of switchers L maps to the number of swapped elementary
/// pairs. PaperL composes L copies (R' = R^L), matching the usual reference
/// curves. StrictChainLPlus1 composes the L+1 pairs that L switchers
/// physically join.
enum class ChainConvention
{
    PaperL,
    StrictChainLPlus1,
};

const char* to_string(ChainConvention);

/// Number of elementary pairs folded together for L switchers. Throws
/// std::domain_error for L < 1 under PaperL and for L < 0 otherwise.
int chain_exponent(int switchers, ChainConvention conv);

/// Bell-diagonal weights after a Bell measurement on the inner qubits of two
/// adjacent pairs (with Pauli correction). The weights combine like a
/// convolution over the Klein four-group with |B1> as identity.
BellDiagonal swap_pair(const BellDiagonal& a, const BellDiagonal& b);

/// QND states compose multiplicatively in R.
Robustness swap_qnd(Robustness a, Robustness b);

Robustness chain_robustness(Robustness r, int switchers, ChainConvention conv = ChainConvention::PaperL);

/// Long-distance fidelity of a chain of identical Werner states:
/// (3/4) ((4 B1 - 1)/3)^E + 1/4.
double chain_werner_fidelity(double b1, int switchers, ChainConvention conv = ChainConvention::PaperL);

/// Left fold of swap_pair over E identical copies of `state`.
BellDiagonal swap_chain(const BellDiagonal& state, int switchers, ChainConvention conv = ChainConvention::PaperL);

} // namespace npp
