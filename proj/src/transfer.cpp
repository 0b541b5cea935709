#include "spinchain/transfer.hpp"

#include <cmath>
#include <numbers>

#include "spinchain/deformation.hpp"
#include "spinchain/errors.hpp"
#include "spinchain/kernels.hpp"
#include "spinchain/spectral.hpp"

namespace spinchain {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double phi) {
    phi = std::fmod(phi, kTwoPi);
    return phi < 0.0 ? phi + kTwoPi : phi;
}

// max-entry modulus of e^{i phi} U - R. Only the anti-diagonal of R is
// nonzero, so off-anti-diagonal terms are phase-independent.
double residual_against_reflection(const CMatrix& u, double phi) {
    const std::size_t m = u.rows();
    const complex rot = std::polar(1.0, phi);
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const double target = (j == m - 1 - i) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(rot * u(i, j) - target));
        }
    return worst;
}

std::vector<complex> end_site_state(std::size_t m) {
    std::vector<complex> e0(m, 0.0);
    e0[0] = 1.0;
    return e0;
}

} // namespace

PstReport pst_report(const ChainSpec& chain, double probe_time) {
    if (!std::isfinite(probe_time)) throw NonFinite("probe time must be finite");
    const SpectralData spec = eigendecompose(chain);
    const CMatrix u = propagator(spec, probe_time).entries;
    const std::size_t m = u.rows();

    PstReport report;
    report.probe_time = probe_time;
    report.strict_residual = residual_against_reflection(u, 0.0);
    report.end_fidelity = std::norm(u(m - 1, 0));

    // Candidate phases: align every anti-diagonal entry (these carry the 1s
    // of R, including the largest-modulus entry for transfer-like chains),
    // plus a coarse grid for chains nowhere near mirror inversion.
    double best_phi = 0.0;
    double best = report.strict_residual;
    auto consider = [&](double phi) {
        const double res = residual_against_reflection(u, phi);
        if (res < best) {
            best = res;
            best_phi = phi;
        }
    };
    for (std::size_t i = 0; i < m; ++i) {
        const complex a = u(i, m - 1 - i);
        if (std::abs(a) > 1e-12) consider(-std::arg(a));
    }
    const int grid = 256;
    for (int k = 0; k < grid; ++k) consider(kTwoPi * k / grid);

    // golden-section refinement around the incumbent
    double lo = best_phi - kTwoPi / grid;
    double hi = best_phi + kTwoPi / grid;
    const double gold = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gold * (hi - lo);
    double x2 = lo + gold * (hi - lo);
    double f1 = residual_against_reflection(u, x1);
    double f2 = residual_against_reflection(u, x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gold * (hi - lo);
            f1 = residual_against_reflection(u, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gold * (hi - lo);
            f2 = residual_against_reflection(u, x2);
        }
    }
    consider(0.5 * (lo + hi));

    report.phase_opt_residual = best;
    report.phi_star = wrap_phase(best_phi);
    return report;
}

RevivalReport revival_report(const ChainSpec& chain, double probe_time) {
    if (!std::isfinite(probe_time)) throw NonFinite("probe time must be finite");
    const SpectralData spec = eigendecompose(chain);
    const std::size_t m = chain.sites();
    const std::vector<complex> psi = evolve(spec, end_site_state(m), probe_time);

    RevivalReport report;
    report.probe_time = probe_time;
    report.alpha = psi[0];
    report.beta = psi[m - 1];
    report.site_probabilities.resize(m);
    for (std::size_t l = 0; l < m; ++l) report.site_probabilities[l] = std::norm(psi[l]);
    report.leak = 1.0 - std::norm(report.alpha) - std::norm(report.beta);
    return report;
}

PatternReport revival_pattern_check(const ChainSpec& chain, double probe_time,
                                    double theta, double tol) {
    if (!std::isfinite(probe_time)) throw NonFinite("probe time must be finite");
    const std::size_t n = chain.order();
    const SpectralData spec = eigendecompose(chain);
    const CMatrix u = propagator(spec, probe_time).entries;
    const InvolutionMatrix q = build_q(n, theta);

    // One common phase for all columns; the relative signs between the two
    // halves of the chain are physical and must not be absorbed per column.
    complex reference;
    double target;
    if (n % 2 == 0) {
        reference = u(n / 2, n / 2);
        target = 1.0;
    } else {
        reference = u(0, 0);
        target = std::sin(2.0 * theta);
    }
    if (std::abs(reference) < 1e-6)
        throw PhaseEstimationFailure("reference amplitude too small for phase estimation");
    const double phi = std::arg(target / reference);
    const complex rot = std::polar(1.0, phi);

    PatternReport report;
    report.phase = phi;
    report.column_residuals.assign(n + 1, 0.0);
    for (std::size_t col = 0; col <= n; ++col) {
        double worst = 0.0;
        for (std::size_t row = 0; row <= n; ++row)
            worst = std::max(worst, std::abs(rot * u(row, col) - q(row, col)));
        report.column_residuals[col] = worst;
        report.max_residual = std::max(report.max_residual, worst);
    }
    report.pass = report.max_residual <= tol;
    return report;
}

std::vector<ScanSample> transfer_probability_scan(const ChainSpec& chain, double t_max,
                                                  std::size_t steps) {
    if (!(t_max > 0.0) || !std::isfinite(t_max))
        throw NonFinite("scan horizon must be positive and finite");
    if (steps < 2) throw DimensionMismatch("scan needs at least two samples");

    const SpectralData spec = eigendecompose(chain);
    const std::size_t m = chain.sites();
    std::vector<double> weights(m);
    for (std::size_t k = 0; k < m; ++k)
        weights[k] = spec.eigenvectors(m - 1, k) * spec.eigenvectors(0, k);

    std::vector<double> times(steps);
    for (std::size_t s = 0; s < steps; ++s)
        times[s] = t_max * static_cast<double>(s) / static_cast<double>(steps - 1);

    const std::vector<complex> amps = kernels::phase_sum_scan(spec.eigenvalues, weights, times);
    std::vector<ScanSample> out(steps);
    for (std::size_t s = 0; s < steps; ++s) out[s] = {times[s], std::norm(amps[s])};
    return out;
}

} // namespace spinchain
