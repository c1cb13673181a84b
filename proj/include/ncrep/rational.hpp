#ifndef NCREP_RATIONAL_HPP
#define NCREP_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ncrep
{

// Exact coefficients everywhere. All values are kept canonical (gcd-reduced,
// positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// "p" or "p/q".
std::string to_string(const Rational &q);

// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

} // namespace ncrep

#endif
