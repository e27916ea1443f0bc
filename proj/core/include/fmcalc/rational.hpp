#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fmcalc {

// Exact rational scalar used throughout the library.
using Rational = mpq_class;

// Parses "p/q" or an integer, with optional sign; the result is canonical.
// Throws ParseError (line 0) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// num/den in canonical form; den must be nonzero.
Rational ratio(long num, long den);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

int sign(const Rational& q);
Rational abs(const Rational& q);

// 2^k for any integer k.
Rational pow2(long k);

// q^k for k >= 0.
Rational pow(const Rational& q, unsigned k);

double to_double(const Rational& q);

// Closed interval [lo, hi] with rational end points; lo == hi marks an exact value.
struct Interval {
    Rational lo;
    Rational hi;

    bool exact() const { return lo == hi; }
    Rational mid() const;
    Rational width() const;
    bool contains(const Rational& q) const { return lo <= q && q <= hi; }
};

// "[lo, hi]", or just the value when exact.
std::string to_string(const Interval& iv);

} // namespace fmcalc
