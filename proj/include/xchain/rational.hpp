#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace xchain {

// Utilities are exact rationals: the correctness conditions are strict
// sign comparisons and rounding must not be able to flip a verdict.
using Rational = boost::rational<std::int64_t>;

/// Parses "3", "-1" or "3/4". Throws std::invalid_argument on junk.
Rational parse_rational(const std::string& text);

/// Renders without loss: integers as "n", otherwise "n/d".
std::string format_rational(const Rational& r);

} // namespace xchain
