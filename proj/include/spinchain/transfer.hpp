// State-transfer diagnostics: residuals of U(T) against the reflection R and
// the revival involution Q, end-site amplitudes, and transfer-probability
// scans over time.
#pragma once

#include <cstddef>
#include <vector>

#include "spinchain/chain.hpp"
#include "spinchain/matrix.hpp"

namespace spinchain {

struct PstReport {
    double probe_time = 0.0;
    double strict_residual = 0.0;    // max-entry |U(T) - R|
    double phase_opt_residual = 0.0; // min over phi of max-entry |e^{i phi} U(T) - R|
    double phi_star = 0.0;           // optimizing phase, in [0, 2 pi)
    double end_fidelity = 0.0;       // |<n|U(T)|0>|^2
};

struct RevivalReport {
    double probe_time = 0.0;
    complex alpha;                         // <0|U(T)|0>
    complex beta;                          // <n|U(T)|0>
    double leak = 0.0;                     // 1 - |alpha|^2 - |beta|^2
    std::vector<double> site_probabilities;
};

struct PatternReport {
    bool pass = false;
    double max_residual = 0.0;
    double phase = 0.0;                    // estimated common global phase phi
    std::vector<double> column_residuals;  // one per starting site
};

struct ScanSample {
    double t = 0.0;
    double probability = 0.0;
};

PstReport pst_report(const ChainSpec& chain, double probe_time);

RevivalReport revival_report(const ChainSpec& chain, double probe_time);

// Checks e^{i phi} U(T) against Q(theta) column by column, with one common
// phase phi estimated from the middle site (n even) or the (0,0) entry
// (n odd). Throws PhaseEstimationFailure when the reference amplitude has
// modulus below 1e-6.
PatternReport revival_pattern_check(const ChainSpec& chain, double probe_time,
                                    double theta, double tol);

// |<n|U(t)|0>|^2 on a uniform grid over [0, t_max] with `steps` samples
// (both endpoints included). steps >= 2.
std::vector<ScanSample> transfer_probability_scan(const ChainSpec& chain, double t_max,
                                                  std::size_t steps);

} // namespace spinchain
