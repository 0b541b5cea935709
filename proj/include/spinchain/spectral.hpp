// Eigendecomposition of symmetric matrices and the exact unitary propagators
// built from the spectrum. The tridiagonal path uses implicit QL with
// Wilkinson shifts; the dense path reduces with Householder reflections first.
#pragma once

#include <cstddef>
#include <vector>

#include "spinchain/chain.hpp"
#include "spinchain/matrix.hpp"

namespace spinchain {

struct SpectralData {
    std::vector<double> eigenvalues; // ascending
    Matrix eigenvectors;             // column k: unit eigenvector of eigenvalues[k]

    std::size_t size() const { return eigenvalues.size(); }
};

struct Propagator {
    CMatrix entries;
    double time = 0.0;
};

// Symmetric tridiagonal eigensolve; subdiag[i] couples i and i+1.
SpectralData eigendecompose_tridiagonal(std::vector<double> diag,
                                        std::vector<double> subdiag);

SpectralData eigendecompose(const ChainSpec& chain);

// Dense real symmetric eigensolve (Householder reduction + QL). Reads the
// lower triangle of the input.
SpectralData eigendecompose_dense(const Matrix& symmetric);

// U(t) = sum_k exp(-i t lambda_k) v_k v_k^T; spectrally exact, unitary up to
// rounding.
Propagator propagator(const SpectralData& spec, double t);

// U(t) * psi0 without forming U. psi0 must be unit norm within 1e-9.
std::vector<complex> evolve(const SpectralData& spec, const std::vector<complex>& psi0,
                            double t);

} // namespace spinchain
