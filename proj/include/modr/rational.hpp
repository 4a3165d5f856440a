#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace modr {

// Expression templates are disabled so that `auto` always yields a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "p", "-p" or "p/q". Throws InputError on anything else or on q = 0.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or a bare integer when the denominator is 1.
std::string to_string(const Rational &value);

} // namespace modr
