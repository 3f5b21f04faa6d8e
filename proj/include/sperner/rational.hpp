#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace sperner {

using Rational = boost::multiprecision::mpq_rational;

/// Parses "p/q" or "p" (optional sign). Throws InvalidInput on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// Canonical text form: lowest terms, "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& value);

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

} // namespace sperner
