#pragma once

#include "fmcalc/poly.hpp"
#include "fmcalc/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fmcalc {

// Truncated Laurent series in 1/v (equivalently, a germ in v as v → ∞).
//
// Terms are stored with exponents of v in descending order; every coefficient
// with exponent >= trunc() is exact, and the unknown remainder is
// O(v^{trunc()-1}).  An exact series (finite Laurent polynomial) has
// trunc() == kExact.
class LaurentSeries {
public:
    static constexpr long kExact = -(1L << 40);

    LaurentSeries() : trunc_(kExact) {}
    static LaurentSeries exact_zero() { return {}; }
    static LaurentSeries constant(const Rational& c);
    static LaurentSeries monomial(const Rational& c, long exponent, long trunc = kExact);
    // Builds a series from (exponent, coefficient) pairs; zero coefficients and
    // terms below trunc are dropped.
    static LaurentSeries from_terms(const std::vector<std::pair<long, Rational>>& terms, long trunc = kExact);

    bool is_exact() const { return trunc_ == kExact; }
    long trunc() const { return trunc_; }
    bool has_terms() const { return !t_.empty(); }
    bool is_exact_zero() const { return t_.empty() && is_exact(); }

    // Terms in descending exponent order.
    std::vector<std::pair<long, Rational>> terms() const;
    Rational coeff(long exponent) const;
    // Leading exponent; requires has_terms().
    long lead_exponent() const { return t_.begin()->first; }
    const Rational& lead_coeff() const { return t_.begin()->second; }
    // Upper bound on the order of the series: the leading exponent, or
    // trunc()-1 when no term is known.
    long top() const;
    // Sign of the germ when certified: ±1 from the leading term, 0 for the exact
    // zero series, nullopt when every known coefficient vanishes but the series
    // is truncated.
    std::optional<int> sign() const;

    // Discards terms below `floor` and lowers the precision claim to `floor`.
    LaurentSeries truncated(long floor) const;
    // Multiplies by v^k.
    LaurentSeries shifted(long k) const;

    LaurentSeries& operator+=(const LaurentSeries& o);
    LaurentSeries& operator-=(const LaurentSeries& o);
    friend LaurentSeries operator+(LaurentSeries l, const LaurentSeries& r) { return l += r; }
    friend LaurentSeries operator-(LaurentSeries l, const LaurentSeries& r) { return l -= r; }
    friend LaurentSeries operator-(const LaurentSeries& s);
    friend LaurentSeries operator*(const LaurentSeries& l, const LaurentSeries& r);
    friend LaurentSeries operator*(const Rational& c, const LaurentSeries& s);
    // Same stored data and the same truncation.
    friend bool operator==(const LaurentSeries& l, const LaurentSeries& r) {
        return l.trunc_ == r.trunc_ && l.t_ == r.t_;
    }

    // "c·v^e + ... + O(v^k)"
    std::string str() const;

private:
    void normalize();
    std::map<long, Rational, std::greater<long>> t_;
    long trunc_;
};

// Substitutes u = `u` and v = v (the series variable) into P(u, v).
LaurentSeries substitute(const Poly2& p, const LaurentSeries& u);

} // namespace fmcalc
