#include "spinchain/models.hpp"

#include <cmath>

#include "spinchain/errors.hpp"

namespace spinchain {

ChainSpec krawtchouk(std::size_t n) {
    std::vector<double> couplings(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double l = static_cast<double>(k + 1); // coupling J_l joins sites l-1, l
        couplings[k] = 0.5 * std::sqrt(l * (static_cast<double>(n) + 1.0 - l));
    }
    return ChainSpec{std::move(couplings), std::vector<double>(n + 1, 0.0), false};
}

ChainSpec uniform(std::size_t n) {
    if (n < 1) throw DimensionMismatch("uniform chain needs at least two sites");
    return ChainSpec{std::vector<double>(n, 1.0), std::vector<double>(n + 1, 0.0), false};
}

ChainSpec shift_fields(const ChainSpec& chain, double c) {
    if (!std::isfinite(c)) throw NonFinite("field shift must be finite");
    ChainSpec out = chain;
    for (double& b : out.fields) b += c;
    return out;
}

} // namespace spinchain
