#include "xchain/rational.hpp"

#include <stdexcept>

namespace xchain {

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(std::stoll(text));
        }
        const std::int64_t num = std::stoll(text.substr(0, slash));
        const std::int64_t den = std::stoll(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator in rational: " + text);
        }
        return Rational(num, den);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("rational out of range: " + text);
    }
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace xchain
