#pragma once

#include <stdexcept>

namespace spinchain {

struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonPositiveCoupling : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonFinite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotNormalized : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ThetaOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotMirrorSymmetric : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadSite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// QL sweep budget exhausted; symmetric tridiagonal input always converges,
// so this indicates a broken build rather than bad data.
struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense conjugation left weight outside the tridiagonal band.
struct NotTridiagonal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PhaseEstimationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidChainFile : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace spinchain
