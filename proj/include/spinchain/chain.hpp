// Nearest-neighbor XX chain specifications in the one-excitation sector.
//
// A chain with sites 0..n is described by couplings J_1..J_n (couplings[k]
// joins sites k and k+1) and local fields B_0..B_n (fields[l] at site l).
// Its one-excitation Hamiltonian is the symmetric tridiagonal matrix with
// the fields on the diagonal and the couplings on the off-diagonals.
#pragma once

#include <cstddef>
#include <vector>

#include "spinchain/matrix.hpp"

namespace spinchain {

struct ChainSpec {
    std::vector<double> couplings; // length n
    std::vector<double> fields;    // length n + 1
    bool allow_signed = false;     // negative couplings permitted (deformed chains)

    std::size_t order() const { return fields.size() - 1; } // n
    std::size_t sites() const { return fields.size(); }     // n + 1
};

// Validating constructor. Throws LengthMismatch, NonFinite, or
// NonPositiveCoupling (the latter only when allow_signed is false).
ChainSpec new_chain(std::vector<double> couplings, std::vector<double> fields,
                    bool allow_signed = false);

// Dense (n+1)x(n+1) symmetric tridiagonal realization.
Matrix to_matrix(const ChainSpec& chain);

// True iff couplings and fields are invariant under site reversal within tol.
bool is_mirror_symmetric(const ChainSpec& chain, double tol = 1e-10);

// Chain realizing R*M*R: couplings and fields reversed. An exact involution.
ChainSpec reflect(const ChainSpec& chain);

// Anti-diagonal site permutation l -> n - l.
struct Reflection {
    std::size_t n = 0;

    std::size_t operator()(std::size_t site) const { return n - site; }

    Matrix to_matrix() const {
        Matrix r(n + 1, n + 1);
        for (std::size_t i = 0; i <= n; ++i) r(i, n - i) = 1.0;
        return r;
    }
};

} // namespace spinchain
