// Isospectral deformation of mirror-symmetric chains: the involutions V(theta)
// and Q = V(2*theta), the dense conjugation V*J*V, and the closed-form
// middle-of-chain update. The two deformation routes are kept separate so each
// can serve as the oracle for the other.
#pragma once

#include <cstddef>

#include "spinchain/chain.hpp"
#include "spinchain/matrix.hpp"

namespace spinchain {

using InvolutionMatrix = Matrix;

// Angle and chain order of a deformation; the order's parity selects the V
// template. theta must lie in [0, pi) and n >= 1 (a single site has no
// deformation); the factory enforces both.
struct DeformationParams {
    double theta = 0.0;
    std::size_t n = 1;
};

DeformationParams deformation_params(std::size_t n, double theta);

// V(theta): sin(theta) on the diagonal of the top half, -sin(theta) on the
// bottom half, cos(theta) on the anti-diagonal, and a central 1 when n is
// even. Symmetric by construction, squares to the identity; V(0) = R.
InvolutionMatrix build_v(std::size_t n, double theta);
InvolutionMatrix build_v(const DeformationParams& params);

// Q = V with the angle doubled. The doubled angle itself is unrestricted;
// the range check applies to theta.
InvolutionMatrix build_q(std::size_t n, double theta);
InvolutionMatrix build_q(const DeformationParams& params);

struct ConjugationResult {
    ChainSpec chain;
    double band_leakage = 0.0; // max |entry| of V*M*V outside the tridiagonal band
};

// Dense route: materializes V*M*V, rejects the input if it is not
// mirror-symmetric within 1e-10, and rejects the product if anything beyond
// rounding survives outside the band. Output carries allow_signed = true.
ConjugationResult deform_conjugate_detailed(const ChainSpec& chain, double theta,
                                            double band_tol = 1e-10);
ChainSpec deform_conjugate(const ChainSpec& chain, double theta);

// Closed-form route: copies the chain and rewrites only the middle entries
// (coupling and two fields for odd n; two couplings for even n). Entries away
// from the middle are copied bit for bit.
ChainSpec deform_closed_form(const ChainSpec& chain, double theta);

// max_k |lambda_k(a) - lambda_k(b)| over ascending spectra.
double isospectral_residual(const ChainSpec& a, const ChainSpec& b);

// max-entry modulus of Q*M*Q - M for the chain's matrix M and Q = V(2*theta).
double q_invariance_residual(const ChainSpec& deformed, double theta);

} // namespace spinchain
