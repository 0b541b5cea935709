#include "spinchain/chain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinchain/errors.hpp"

namespace spinchain {

ChainSpec new_chain(std::vector<double> couplings, std::vector<double> fields,
                    bool allow_signed) {
    if (fields.size() != couplings.size() + 1)
        throw LengthMismatch("chain needs length(fields) = length(couplings) + 1, got " +
                             std::to_string(fields.size()) + " fields for " +
                             std::to_string(couplings.size()) + " couplings");
    for (double j : couplings)
        if (!std::isfinite(j)) throw NonFinite("coupling is not finite");
    for (double b : fields)
        if (!std::isfinite(b)) throw NonFinite("field is not finite");
    if (!allow_signed)
        for (double j : couplings)
            if (j <= 0.0)
                throw NonPositiveCoupling("coupling " + std::to_string(j) +
                                          " requires allow_signed");
    return ChainSpec{std::move(couplings), std::move(fields), allow_signed};
}

Matrix to_matrix(const ChainSpec& chain) {
    const std::size_t m = chain.sites();
    Matrix out(m, m);
    for (std::size_t l = 0; l < m; ++l) out(l, l) = chain.fields[l];
    for (std::size_t k = 0; k + 1 < m; ++k) {
        out(k, k + 1) = chain.couplings[k];
        out(k + 1, k) = chain.couplings[k];
    }
    return out;
}

bool is_mirror_symmetric(const ChainSpec& chain, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const std::size_t n = chain.order();
    for (std::size_t k = 0; k < chain.couplings.size(); ++k)
        if (std::abs(chain.couplings[k] - chain.couplings[n - 1 - k]) > tol) return false;
    for (std::size_t l = 0; l <= n; ++l)
        if (std::abs(chain.fields[l] - chain.fields[n - l]) > tol) return false;
    return true;
}

ChainSpec reflect(const ChainSpec& chain) {
    ChainSpec out = chain;
    std::reverse(out.couplings.begin(), out.couplings.end());
    std::reverse(out.fields.begin(), out.fields.end());
    return out;
}

} // namespace spinchain
