#pragma once

#include "fmcalc/ring.hpp"

#include <doctest.h>

#include <ostream>

namespace fmcalc {

inline std::ostream& operator<<(std::ostream& os, const ChernVector& v) { return os << to_string(v); }
inline std::ostream& operator<<(std::ostream& os, const DivisorB& d) { return os << to_string(d); }

} // namespace fmcalc

namespace testing {

using fmcalc::ChernVector;
using fmcalc::DivisorB;
using fmcalc::Rational;
using fmcalc::ratio;

inline DivisorB e1(const Rational& c = 1) { return DivisorB({c}); }

// Rank-1 vector (n, x, S·e1, η·e1, a, s).
inline ChernVector V(const Rational& n, const Rational& x, const Rational& S, const Rational& eta, const Rational& a,
                     const Rational& s) {
    return {n, x, e1(S), e1(eta), a, s};
}

} // namespace testing
