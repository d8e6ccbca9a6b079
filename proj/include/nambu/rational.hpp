#ifndef NAMBU_RATIONAL_HPP
#define NAMBU_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace nambu {

// Exact rational coefficients. GMP keeps them canonical (reduced, positive
// denominator) through all arithmetic.
using Rational = mpq_class;

// base^e for any integer e; throws std::domain_error on 0^negative.
Rational rational_pow(const Rational& base, long e);

// "p" or "p/q".
std::string to_string(const Rational& r);

// Parses "p", "-p", or "p/q". Throws std::invalid_argument on junk.
Rational rational_from_string(const std::string& text);

}  // namespace nambu

#endif
