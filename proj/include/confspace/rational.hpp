#ifndef CONFSPACE_RATIONAL_HPP
#define CONFSPACE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace confspace {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "n" or "p/q" (optional sign, decimal digits only). Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, or "n" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

}  // namespace confspace

#endif  // CONFSPACE_RATIONAL_HPP
