#pragma once

// Exact integer and rational scalars. No floating point anywhere in singlat.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace singlat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "p" for integers, "p/q" otherwise (canonical form, q > 0).
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p" or "p/q" with an optional leading sign. Throws Error on junk
/// or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Largest integer <= q.
Integer floor(const Rational& q);
/// Smallest integer >= q.
Integer ceil(const Rational& q);

/// Narrowing for values known to be small (pairings of integral cycles, costs).
/// Throws Error if the value does not fit.
long to_long(const Integer& z);
long to_long(const Rational& q);

}  // namespace singlat
