#pragma once

#include "fmcalc/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fmcalc {

// Dense univariate polynomial with rational coefficients; coeffs[i] multiplies t^i.
class Poly1 {
public:
    Poly1() = default;
    explicit Poly1(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // −1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& leading() const { return c_.back(); }

    Rational eval(const Rational& t) const;
    int sign_at(const Rational& t) const { return sign(eval(t)); }
    // Enclosure of the range over [lo, hi] by interval Horner evaluation.
    Interval eval(const Interval& t) const;

    Poly1 derivative() const;

    friend Poly1 operator+(const Poly1& l, const Poly1& r);
    friend Poly1 operator-(const Poly1& l, const Poly1& r);
    friend Poly1 operator*(const Poly1& l, const Poly1& r);
    friend Poly1 operator*(const Rational& c, const Poly1& p);
    friend bool operator==(const Poly1& l, const Poly1& r) { return l.c_ == r.c_; }

    // Euclidean division; throws DomainError when dividing by zero.
    static std::pair<Poly1, Poly1> divmod(const Poly1& num, const Poly1& den);
    static Poly1 gcd(const Poly1& a, const Poly1& b); // monic

private:
    void normalize();
    std::vector<Rational> c_;
};

// Isolating brackets for all distinct real roots of p in (lo, hi].
// Each result brackets exactly one root; exact rational roots found along the
// way are returned as degenerate intervals.  End points are dyadic refinements
// of lo/hi.  `p` must be nonzero.
std::vector<Interval> isolate_roots(const Poly1& p, const Rational& lo, const Rational& hi);

// Shrinks an isolating bracket to width <= precision by bisection.
Interval refine_root(const Poly1& p, Interval bracket, const Rational& precision);

// Cauchy bound rounded up to a power of two: every root has |t| < bound.
Rational root_bound(const Poly1& p);

// Sparse bivariate polynomial in (u, v); key (i, j) multiplies u^i v^j.
class Poly2 {
public:
    using Exponents = std::pair<int, int>;

    Poly2() = default;
    static Poly2 constant(const Rational& c);
    static Poly2 monomial(const Rational& c, int i, int j);
    static Poly2 u() { return monomial(1, 1, 0); }
    static Poly2 v() { return monomial(1, 0, 1); }

    bool is_zero() const { return t_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return t_; }
    Rational coeff(int i, int j) const;
    int degree_u() const;
    int degree_v() const;

    Rational eval(const Rational& u, const Rational& v) const;
    // Specialize v, giving a polynomial in u.
    Poly1 at_v(const Rational& v) const;

    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    friend Poly2 operator+(Poly2 l, const Poly2& r) { return l += r; }
    friend Poly2 operator-(Poly2 l, const Poly2& r) { return l -= r; }
    friend Poly2 operator-(const Poly2& p);
    friend Poly2 operator*(const Poly2& l, const Poly2& r);
    friend Poly2 operator*(const Rational& c, const Poly2& p);
    friend bool operator==(const Poly2& l, const Poly2& r) { return l.t_ == r.t_; }

    // Multivariate division by a single divisor in lex order (u > v).
    // Returns (quotient, remainder); the remainder is zero exactly when the
    // divisor divides the dividend.
    static std::pair<Poly2, Poly2> divide(const Poly2& f, const Poly2& d);

    std::string str() const;

private:
    void add_term(const Exponents& e, const Rational& c);
    std::map<Exponents, Rational> t_;
};

} // namespace fmcalc
