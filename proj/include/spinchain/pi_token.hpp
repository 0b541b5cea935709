#pragma once

#include <string>

namespace spinchain {

// Parses a time or angle token: a plain decimal ("1.5"), "pi", a multiple ("2pi",
// "-0.5pi"), or a fraction ("pi/2", "3pi/4"). Throws std::invalid_argument
// on anything else.
double parse_pi_token(const std::string& text);

} // namespace spinchain
