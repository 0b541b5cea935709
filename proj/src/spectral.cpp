#include "spinchain/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "spinchain/errors.hpp"
#include "spinchain/kernels.hpp"

namespace spinchain {

namespace {

constexpr int kSweepBudget = 50; // QL iterations per eigenvalue

// Implicit QL with Wilkinson shift on a symmetric tridiagonal matrix, in the
// lineage of the Algol tql2 / EISPACK imtql2 routines. d holds the diagonal
// and becomes the (unordered) eigenvalues; e holds the subdiagonal with
// e[i] coupling i and i+1 and e[m-1] used as workspace. Rotations accumulate
// into the columns of z, which may carry a prior orthogonal basis.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, Matrix& z) {
    const std::size_t m = d.size();
    if (m == 0) return;
    e[m - 1] = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();

    for (std::size_t l = 0; l < m; ++l) {
        int iter = 0;
        std::size_t seg;
        do {
            for (seg = l; seg + 1 < m; ++seg) {
                const double dd = std::abs(d[seg]) + std::abs(d[seg + 1]);
                if (std::abs(e[seg]) <= eps * dd) break;
            }
            if (seg != l) {
                if (iter++ == kSweepBudget)
                    throw ConvergenceFailure("QL sweep budget exhausted");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[seg] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (std::size_t i = seg; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) { // rotation annihilated early; restart the segment
                        d[i + 1] -= p;
                        e[seg] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (std::size_t k = 0; k < m; ++k) {
                        f = z(k, i + 1);
                        z(k, i + 1) = s * z(k, i) + c * f;
                        z(k, i) = c * z(k, i) - s * f;
                    }
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[seg] = 0.0;
            }
        } while (seg != l);
    }
}

// Ascending eigenvalue order, then each eigenvector's first nonzero component
// made positive so repeated runs (and degenerate spectra) give one canonical
// output.
void sort_and_normalize(std::vector<double>& d, Matrix& z) {
    const std::size_t m = d.size();
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(),
                     [&d](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    std::vector<double> ds(m);
    Matrix zs(m, m);
    for (std::size_t k = 0; k < m; ++k) {
        ds[k] = d[perm[k]];
        for (std::size_t i = 0; i < m; ++i) zs(i, k) = z(i, perm[k]);
    }
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            if (zs(i, k) == 0.0) continue;
            if (zs(i, k) < 0.0)
                for (std::size_t r = 0; r < m; ++r) zs(r, k) = -zs(r, k);
            break;
        }
    }
    d = std::move(ds);
    z = std::move(zs);
}

// Householder reduction of a real symmetric matrix to tridiagonal form, with
// the accumulated transform left in a (tred2 lineage). On return
// a_original = a * T * a^T with T = tridiag(d, e), e[i] coupling i-1 and i.
void householder_tridiagonalize(Matrix& a, std::vector<double>& d, std::vector<double>& e) {
    const std::size_t m = a.rows();
    d.assign(m, 0.0);
    e.assign(m, 0.0);
    if (m == 0) return;

    for (std::size_t i = m; i-- > 1;) {
        const std::size_t l = i - 1;
        double h = 0.0;
        if (i > 1) {
            double scale = 0.0;
            for (std::size_t k = 0; k <= l; ++k) scale += std::abs(a(i, k));
            if (scale == 0.0) {
                e[i] = a(i, l);
            } else {
                for (std::size_t k = 0; k <= l; ++k) {
                    a(i, k) /= scale;
                    h += a(i, k) * a(i, k);
                }
                double f = a(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a(i, l) = f - g;
                f = 0.0;
                for (std::size_t j = 0; j <= l; ++j) {
                    a(j, i) = a(i, j) / h;
                    g = 0.0;
                    for (std::size_t k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
                    for (std::size_t k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
                    e[j] = g / h;
                    f += e[j] * a(i, j);
                }
                const double hh = f / (h + h);
                for (std::size_t j = 0; j <= l; ++j) {
                    f = a(i, j);
                    g = e[j] - hh * f;
                    e[j] = g;
                    for (std::size_t k = 0; k <= j; ++k)
                        a(j, k) -= f * e[k] + g * a(i, k);
                }
            }
        } else {
            e[i] = a(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (d[i] != 0.0) {
            for (std::size_t j = 0; j < i; ++j) {
                double g = 0.0;
                for (std::size_t k = 0; k < i; ++k) g += a(i, k) * a(k, j);
                for (std::size_t k = 0; k < i; ++k) a(k, j) -= g * a(k, i);
            }
        }
        d[i] = a(i, i);
        a(i, i) = 1.0;
        for (std::size_t j = 0; j < i; ++j) {
            a(j, i) = 0.0;
            a(i, j) = 0.0;
        }
    }
}

} // namespace

SpectralData eigendecompose_tridiagonal(std::vector<double> diag,
                                        std::vector<double> subdiag) {
    const std::size_t m = diag.size();
    if (subdiag.size() + 1 != m && !(m == 0 && subdiag.empty()))
        throw DimensionMismatch("tridiagonal eigensolve: subdiagonal length must be n");
    subdiag.resize(m, 0.0); // trailing workspace slot
    Matrix z = Matrix::identity(m);
    ql_implicit_shift(diag, subdiag, z);
    sort_and_normalize(diag, z);
    return SpectralData{std::move(diag), std::move(z)};
}

SpectralData eigendecompose(const ChainSpec& chain) {
    return eigendecompose_tridiagonal(chain.fields, chain.couplings);
}

SpectralData eigendecompose_dense(const Matrix& symmetric) {
    if (symmetric.rows() != symmetric.cols())
        throw DimensionMismatch("dense eigensolve needs a square matrix");
    Matrix z = symmetric;
    std::vector<double> d, e;
    householder_tridiagonalize(z, d, e);
    // shift the offdiagonal to the e[i] ~ (i, i+1) convention of the QL core
    const std::size_t m = d.size();
    for (std::size_t i = 0; i + 1 < m; ++i) e[i] = e[i + 1];
    if (m > 0) e[m - 1] = 0.0;
    ql_implicit_shift(d, e, z);
    sort_and_normalize(d, z);
    return SpectralData{std::move(d), std::move(z)};
}

Propagator propagator(const SpectralData& spec, double t) {
    if (!std::isfinite(t)) throw NonFinite("propagator time must be finite");
    return Propagator{kernels::assemble_propagator(spec.eigenvectors, spec.eigenvalues, t),
                      t};
}

std::vector<complex> evolve(const SpectralData& spec, const std::vector<complex>& psi0,
                            double t) {
    if (!std::isfinite(t)) throw NonFinite("evolution time must be finite");
    const std::size_t m = spec.size();
    if (psi0.size() != m)
        throw DimensionMismatch("state length does not match the chain");
    double norm2 = 0.0;
    for (const complex& c : psi0) norm2 += std::norm(c);
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9)
        throw NotNormalized("input state must have unit norm");

    // psi(t) = V diag(exp(-i t lambda)) V^T psi0
    std::vector<complex> modes(m, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
        complex acc = 0.0;
        for (std::size_t i = 0; i < m; ++i) acc += spec.eigenvectors(i, k) * psi0[i];
        modes[k] = acc * std::polar(1.0, -t * spec.eigenvalues[k]);
    }
    std::vector<complex> out(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        complex acc = 0.0;
        for (std::size_t k = 0; k < m; ++k) acc += spec.eigenvectors(i, k) * modes[k];
        out[i] = acc;
    }
    return out;
}

} // namespace spinchain
