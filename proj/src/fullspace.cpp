#include "spinchain/fullspace.hpp"

#include <array>
#include <bit>
#include <cmath>

#include "spinchain/errors.hpp"
#include "spinchain/kernels.hpp"
#include "spinchain/spectral.hpp"

namespace spinchain {

namespace {

constexpr std::size_t kMaxOrder = 12; // dimension 2^13 = 8192

// Real symmetric embedding of a Hermitian matrix H = A + iB as
// [[A, -B], [B, A]]; eigenvalues of H appear twice each.
Matrix embed_hermitian(const CMatrix& h) {
    const std::size_t m = h.rows();
    Matrix e(2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const double re = h(i, j).real();
            const double im = h(i, j).imag();
            e(i, j) = re;
            e(m + i, m + j) = re;
            e(i, m + j) = -im;
            e(m + i, j) = im;
        }
    return e;
}

// Eigenvalues of a Hermitian matrix, descending; the doubled spectrum of the
// real embedding is collapsed by averaging adjacent pairs.
std::vector<double> hermitian_eigenvalues_desc(const CMatrix& h) {
    const std::size_t m = h.rows();
    const SpectralData sd = eigendecompose_dense(embed_hermitian(h));
    std::vector<double> out(m);
    for (std::size_t k = 0; k < m; ++k)
        out[m - 1 - k] = 0.5 * (sd.eigenvalues[2 * k] + sd.eigenvalues[2 * k + 1]);
    return out;
}

// Principal square root of a Hermitian PSD matrix via spectral projectors of
// the real embedding: for a cluster of the doubled spectrum with real
// projector P, the complex projector is P_topleft + i P_bottomleft.
CMatrix sqrtm_psd(const CMatrix& h) {
    const std::size_t m = h.rows();
    const SpectralData sd = eigendecompose_dense(embed_hermitian(h));
    const std::size_t em = 2 * m;
    double scale = 1.0;
    for (double v : sd.eigenvalues) scale = std::max(scale, std::abs(v));
    const double cluster_tol = 1e-10 * scale;

    CMatrix out(m, m);
    std::size_t lo = 0;
    while (lo < em) {
        std::size_t hi = lo;
        while (hi + 1 < em && sd.eigenvalues[hi + 1] - sd.eigenvalues[lo] <= cluster_tol)
            ++hi;
        double mean = 0.0;
        for (std::size_t k = lo; k <= hi; ++k) mean += sd.eigenvalues[k];
        mean /= static_cast<double>(hi - lo + 1);
        const double w = std::sqrt(std::max(mean, 0.0));
        if (w != 0.0) {
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) {
                    double re = 0.0, im = 0.0;
                    for (std::size_t k = lo; k <= hi; ++k) {
                        re += sd.eigenvectors(a, k) * sd.eigenvectors(b, k);
                        im += sd.eigenvectors(m + a, k) * sd.eigenvectors(b, k);
                    }
                    out(a, b) += w * complex(re, im);
                }
        }
        lo = hi + 1;
    }
    return out;
}

void require_buildable(std::size_t n) {
    if (n > kMaxOrder)
        throw TooLarge("full space limited to 13 sites (dimension 8192)");
}

} // namespace

FullHamiltonian build_full(const ChainSpec& chain) {
    const std::size_t n = chain.order();
    require_buildable(n);
    const std::size_t dim = std::size_t{1} << (n + 1);
    Matrix h(dim, dim);
    for (std::size_t b = 0; b < dim; ++b) {
        double diag = 0.0;
        for (std::size_t l = 0; l <= n; ++l)
            if ((b >> l) & 1u) diag += chain.fields[l];
        h(b, b) = diag;
        // XX term hops the excitation across an up/down neighbor pair
        for (std::size_t l = 0; l < n; ++l) {
            const std::size_t pair = (std::size_t{1} << l) | (std::size_t{1} << (l + 1));
            const std::size_t bits = b & pair;
            if (bits != 0 && bits != pair) h(b ^ pair, b) = chain.couplings[l];
        }
    }
    return FullHamiltonian{n + 1, std::move(h)};
}

double magnetization_commutator_residual(const FullHamiltonian& full) {
    const std::size_t dim = full.dimension();
    double worst = 0.0;
    // S is diagonal (the up-spin count), so [H, S](a, b) = H(a, b) (S_b - S_a)
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            const int da = std::popcount(a);
            const int db = std::popcount(b);
            if (da != db)
                worst = std::max(worst, std::abs(full.entries(a, b) * (db - da)));
        }
    return worst;
}

Matrix restrict_one_excitation(const FullHamiltonian& full) {
    const std::size_t m = full.site_count;
    Matrix out(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            out(i, j) = full.entries(std::size_t{1} << i, std::size_t{1} << j);
    return out;
}

FullState evolve_full(const FullHamiltonian& full, const FullState& psi0, double t) {
    return evolve(eigendecompose_dense(full.entries), psi0, t);
}

CMatrix reduced_two_site_density(const FullState& psi, std::size_t site_count,
                                 std::size_t site_a, std::size_t site_b) {
    if (psi.size() != (std::size_t{1} << site_count))
        throw DimensionMismatch("state length is not 2^site_count");
    if (site_a >= site_count || site_b >= site_count || site_a == site_b)
        throw BadSite("pair sites must be distinct and within the chain");

    const std::size_t bit_a = std::size_t{1} << site_a;
    const std::size_t bit_b = std::size_t{1} << site_b;
    const std::size_t pair = bit_a | bit_b;
    CMatrix rho(4, 4);
    for (std::size_t rest = 0; rest < psi.size(); ++rest) {
        if (rest & pair) continue;
        std::array<complex, 4> amp;
        for (std::size_t sa = 0; sa < 2; ++sa)
            for (std::size_t sb = 0; sb < 2; ++sb)
                amp[(sa << 1) | sb] = psi[rest | (sa ? bit_a : 0) | (sb ? bit_b : 0)];
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) rho(r, c) += amp[r] * std::conj(amp[c]);
    }
    return rho;
}

double wootters_concurrence(const CMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw DimensionMismatch("concurrence needs a 4x4 density matrix");

    // spin-flipped state (sy x sy) rho* (sy x sy); the flip matrix is the
    // anti-diagonal with signs (-1, 1, 1, -1)
    static constexpr std::array<double, 4> sign{-1.0, 1.0, 1.0, -1.0};
    CMatrix flipped(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            flipped(i, j) = sign[i] * sign[j] * std::conj(rho(3 - i, 3 - j));

    const CMatrix root = sqrtm_psd(rho);
    const CMatrix middle = kernels::cmatmul(kernels::cmatmul(root, flipped), root);
    std::vector<double> vals = hermitian_eigenvalues_desc(middle);
    // clamp at zero before the square roots; eigenvalues that are pure
    // rounding junk (~eps * max) would otherwise bleed ~1e-8 into the result
    const double floor = 1e-13 * std::max(vals[0], 0.0);
    for (double& v : vals) v = v > floor ? std::sqrt(v) : 0.0;
    return std::max(0.0, vals[0] - vals[1] - vals[2] - vals[3]);
}

double concurrence_after_revival(const ChainSpec& chain, double probe_time,
                                 std::size_t site_a, std::size_t site_b) {
    const std::size_t n = chain.order();
    require_buildable(n);
    if (site_a > n || site_b > n || site_a == site_b)
        throw BadSite("pair sites must be distinct and within the chain");

    const FullHamiltonian full = build_full(chain);
    FullState psi0(full.dimension(), 0.0);
    psi0[std::size_t{1} << 0] = 1.0; // one excitation at site 0
    const FullState psi = evolve_full(full, psi0, probe_time);
    return wootters_concurrence(reduced_two_site_density(psi, n + 1, site_a, site_b));
}

} // namespace spinchain
