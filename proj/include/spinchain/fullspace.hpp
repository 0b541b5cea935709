// Small-n validation in the full 2^(n+1)-dimensional spin space: the XX
// Hamiltonian assembled from Pauli products, excitation-number conservation,
// the one-excitation restriction, and end-to-end entanglement after revival.
//
// Basis convention: computational basis index is the bitstring with site 0 as
// the least significant bit; spin-up = bit 1.
#pragma once

#include <cstddef>
#include <vector>

#include "spinchain/chain.hpp"
#include "spinchain/matrix.hpp"

namespace spinchain {

// Amplitude vector over the full spin basis; kept unit-norm by the evolution
// entry points.
using FullState = std::vector<complex>;

struct FullHamiltonian {
    std::size_t site_count = 0; // n + 1
    Matrix entries;             // real symmetric, 2^(n+1) x 2^(n+1)

    std::size_t dimension() const { return entries.rows(); }
};

// H = 1/2 sum_l J_{l+1} (sx_l sx_{l+1} + sy_l sy_{l+1}) + 1/2 sum_l B_l (sz_l + 1).
// Throws TooLarge for n > 12.
FullHamiltonian build_full(const ChainSpec& chain);

// max-entry modulus of H*S - S*H with S = 1/2 sum_l (sz_l + 1) (the up-spin
// counter). Zero for any chain-built Hamiltonian.
double magnetization_commutator_residual(const FullHamiltonian& full);

// Matrix of H on the one-spin-up states ordered by site index; equals the
// chain's tridiagonal matrix.
Matrix restrict_one_excitation(const FullHamiltonian& full);

// Spectral evolution under the dense Hamiltonian. psi0 must be unit norm.
FullState evolve_full(const FullHamiltonian& full, const FullState& psi0, double t);

// Reduced density matrix of the (site_a, site_b) qubit pair in the basis
// |s_a s_b> with index (s_a << 1) | s_b.
CMatrix reduced_two_site_density(const FullState& psi, std::size_t site_count,
                                 std::size_t site_a, std::size_t site_b);

// Spin-flip (Wootters) concurrence of a two-qubit density matrix.
double wootters_concurrence(const CMatrix& rho);

// Embeds the one-excitation end-site state in the full space, evolves it to
// probe_time under the full Hamiltonian, and returns the concurrence of the
// (site_a, site_b) pair.
double concurrence_after_revival(const ChainSpec& chain, double probe_time,
                                 std::size_t site_a, std::size_t site_b);

} // namespace spinchain
