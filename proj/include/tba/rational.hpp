#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace tba {

/// Exact rational scalar used by all combinatorial layers.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "p" or "p/q" with an unsigned denominator q > 0.
/// Throws std::invalid_argument for anything else.
Rational parse_rational(std::string_view text);

/// Renders in lowest terms as "p", or "p/q" when the denominator is not 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace tba
