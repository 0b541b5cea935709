#include "spinchain/deformation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinchain/errors.hpp"
#include "spinchain/kernels.hpp"
#include "spinchain/spectral.hpp"

namespace spinchain {

namespace {

constexpr double kMirrorTol = 1e-10;

void require_theta(double theta) {
    if (!(theta >= 0.0 && theta < std::numbers::pi))
        throw ThetaOutOfRange("theta must lie in [0, pi), got " + std::to_string(theta));
}

void require_deformable(std::size_t n) {
    if (n < 1)
        throw DimensionMismatch("a single-site chain has no deformation");
}

// Shared fill for V(theta) and Q = V(2 theta): the skeleton only depends on
// the sine/cosine of the angle actually written into the entries.
InvolutionMatrix involution_from_angle(std::size_t n, double angle) {
    const std::size_t m = n + 1;
    const double s = std::sin(angle);
    const double c = std::cos(angle);
    InvolutionMatrix v(m, m);
    for (std::size_t l = 0; l < m; ++l) {
        if (2 * l < n) {
            v(l, l) = s;
            v(l, n - l) = c;
        } else if (2 * l > n) {
            v(l, l) = -s;
            v(l, n - l) = c;
        } else {
            v(l, l) = 1.0; // fixed middle site, n even
        }
    }
    return v;
}

} // namespace

DeformationParams deformation_params(std::size_t n, double theta) {
    require_deformable(n);
    require_theta(theta);
    return DeformationParams{theta, n};
}

InvolutionMatrix build_v(std::size_t n, double theta) {
    const DeformationParams params = deformation_params(n, theta);
    return involution_from_angle(params.n, params.theta);
}

InvolutionMatrix build_v(const DeformationParams& params) {
    return build_v(params.n, params.theta);
}

InvolutionMatrix build_q(std::size_t n, double theta) {
    const DeformationParams params = deformation_params(n, theta);
    return involution_from_angle(params.n, 2.0 * params.theta);
}

InvolutionMatrix build_q(const DeformationParams& params) {
    return build_q(params.n, params.theta);
}

ConjugationResult deform_conjugate_detailed(const ChainSpec& chain, double theta,
                                            double band_tol) {
    require_deformable(chain.order());
    require_theta(theta);
    if (!is_mirror_symmetric(chain, kMirrorTol))
        throw NotMirrorSymmetric("conjugation needs a mirror-symmetric chain");

    const std::size_t m = chain.sites();
    const InvolutionMatrix v = involution_from_angle(chain.order(), theta);
    const Matrix w = kernels::matmul(kernels::matmul(v, to_matrix(chain)), v);

    double leakage = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t gap = i > j ? i - j : j - i;
            if (gap >= 2) leakage = std::max(leakage, std::abs(w(i, j)));
        }
    if (leakage > band_tol)
        throw NotTridiagonal("conjugate leaks " + std::to_string(leakage) +
                             " outside the tridiagonal band");

    ChainSpec out;
    out.allow_signed = true;
    out.fields.resize(m);
    out.couplings.resize(m - 1);
    for (std::size_t l = 0; l < m; ++l) out.fields[l] = w(l, l);
    for (std::size_t k = 0; k + 1 < m; ++k)
        out.couplings[k] = 0.5 * (w(k, k + 1) + w(k + 1, k));
    return ConjugationResult{std::move(out), leakage};
}

ChainSpec deform_conjugate(const ChainSpec& chain, double theta) {
    return deform_conjugate_detailed(chain, theta).chain;
}

ChainSpec deform_closed_form(const ChainSpec& chain, double theta) {
    const std::size_t n = chain.order();
    require_deformable(n);
    require_theta(theta);
    if (!is_mirror_symmetric(chain, kMirrorTol))
        throw NotMirrorSymmetric("closed-form deformation needs a mirror-symmetric chain");

    ChainSpec out = chain;
    out.allow_signed = true;
    if (n % 2 == 1) {
        // middle coupling rescaled, the two middle fields split symmetrically
        const std::size_t mid = (n + 1) / 2;
        const double j_mid = chain.couplings[mid - 1];
        const double b_mid = chain.fields[(n - 1) / 2];
        out.couplings[mid - 1] = j_mid * std::cos(2.0 * theta);
        out.fields[(n - 1) / 2] = b_mid + j_mid * std::sin(2.0 * theta);
        out.fields[(n + 1) / 2] = b_mid - j_mid * std::sin(2.0 * theta);
    } else {
        // the two couplings around the fixed middle site pick up cos +- sin
        const std::size_t half = n / 2;
        const double j_half = chain.couplings[half - 1];
        out.couplings[half - 1] = j_half * (std::cos(theta) + std::sin(theta));
        out.couplings[half] = j_half * (std::cos(theta) - std::sin(theta));
    }
    return out;
}

double isospectral_residual(const ChainSpec& a, const ChainSpec& b) {
    if (a.order() != b.order())
        throw DimensionMismatch("spectra of different chain orders are not comparable");
    const std::vector<double> ea = eigendecompose(a).eigenvalues;
    const std::vector<double> eb = eigendecompose(b).eigenvalues;
    double worst = 0.0;
    for (std::size_t k = 0; k < ea.size(); ++k)
        worst = std::max(worst, std::abs(ea[k] - eb[k]));
    return worst;
}

double q_invariance_residual(const ChainSpec& deformed, double theta) {
    const InvolutionMatrix q = build_q(deformed.order(), theta);
    const Matrix m = to_matrix(deformed);
    return max_abs_diff(kernels::matmul(kernels::matmul(q, m), q), m);
}

} // namespace spinchain
