#include "spinchain/pi_token.hpp"

#include <cctype>
#include <numbers>
#include <stdexcept>

namespace spinchain {

namespace {

bool parse_number(const std::string& s, double& out) {
    if (s.empty()) return false;
    try {
        std::size_t used = 0;
        out = std::stod(s, &used);
        return used == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace

double parse_pi_token(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));

    double plain = 0.0;
    if (parse_number(s, plain)) return plain;

    const std::size_t at = s.find("pi");
    if (at == std::string::npos)
        throw std::invalid_argument("cannot parse token \"" + text + "\"");

    const std::string head = s.substr(0, at);
    const std::string tail = s.substr(at + 2);

    double factor = 1.0;
    if (head == "-")
        factor = -1.0;
    else if (!head.empty() && !parse_number(head, factor))
        throw std::invalid_argument("cannot parse token \"" + text + "\"");

    double divisor = 1.0;
    if (!tail.empty()) {
        if (tail.front() != '/' || !parse_number(tail.substr(1), divisor) || divisor == 0.0)
            throw std::invalid_argument("cannot parse token \"" + text + "\"");
    }
    return factor * std::numbers::pi / divisor;
}

} // namespace spinchain
