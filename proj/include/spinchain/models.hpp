// Canonical chain families used as fixtures.
#pragma once

#include <cstddef>

#include "spinchain/chain.hpp"

namespace spinchain {

// J_l = sqrt(l (n + 1 - l)) / 2, B_l = 0. Mirror-symmetric; transfers the
// end-site excitation perfectly at T = pi (up to a global phase, removed by
// shift_fields(chain, -n/2)).
ChainSpec krawtchouk(std::size_t n);

// J_l = 1, B_l = 0. Negative control: no perfect transfer for n >= 3.
ChainSpec uniform(std::size_t n);

// Adds c to every field; shifts the whole spectrum by c and multiplies the
// propagator by exp(-i t c).
ChainSpec shift_fields(const ChainSpec& chain, double c);

} // namespace spinchain
