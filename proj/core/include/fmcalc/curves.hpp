#pragma once

#include "fmcalc/laurent.hpp"
#include "fmcalc/poly.hpp"
#include "fmcalc/ring.hpp"

#include <string>
#include <variant>
#include <vector>

namespace fmcalc {

// One of the two polarization-limit curves in the (v, u) plane.
//   Tilt(a, b):   a(ha+2b)/(ha+b)² = (hu+v) / (⅙u(h²u²+3huv+3v²)),
//                 requires ha + 2b > 0 and ha + b ≠ 0;
//   OneDim(y, z): h + z/y = ½u(hu+2v), requires h + z/y > 0.
// The constant h is taken from the geometry.
class CurveConstraint {
public:
    enum class Type { Tilt, OneDim };

    // Throw ConfigError on violated invariants.
    static CurveConstraint tilt(const Rational& h, const Rational& a, const Rational& b);
    static CurveConstraint onedim(const Rational& h, const Rational& y, const Rational& z);

    Type type() const { return type_; }
    bool is_tilt() const { return type_ == Type::Tilt; }
    const Rational& h() const { return h_; }
    // (a, b) for Tilt, (y, z) for OneDim.
    const Rational& p1() const { return p1_; }
    const Rational& p2() const { return p2_; }

    // Leading coefficient u1 of u(v) = u1/v + O(1/v³).
    Rational u1() const;

    std::string str() const;

private:
    CurveConstraint(Type t, Rational h, Rational p1, Rational p2)
        : type_(t), h_(std::move(h)), p1_(std::move(p1)), p2_(std::move(p2)) {}
    Type type_;
    Rational h_;
    Rational p1_;
    Rational p2_;
};

// Cross-multiplied curve equation P(u, v) whose zero set is the curve:
//   Tilt:   a(ha+2b)·⅙u(h²u²+3huv+3v²) − (ha+b)²(hu+v)
//   OneDim: ½u(hu+2v) − (h + z/y)
Poly2 constraint_poly(const CurveConstraint& c);

// ω³/6 for ω = uΘ + v·p^*H_B as a polynomial in (u, v), with the
// intersection numbers Θ³, Θ²H, ΘH², H³ taken from ring multiplication.
Poly2 omega_cube_sixth(const BaseGeometry& g);

// The polynomial vanishes on a root bracket: it changes sign (or vanishes) on
// it and is at most `tolerance` in absolute value at both end points.
bool bracket_vanishes(const Poly1& p, const Interval& bracket, const Rational& tolerance);

// Positive root u of P(·, vpar), bracketed by dyadic end points to width
// <= precision (a degenerate interval when the root is rational and found
// exactly; always exact for h = 0).  Among several positive roots, the one
// with u·vpar closest to u1 is returned.  Throws CurveDomainError when there
// is no positive root.
Interval solve_u(const CurveConstraint& c, const Rational& vpar, const Rational& precision);

// Odd Laurent expansion u = u1/v + u3/v³ + ... through v^{-order}.
// Exact for h = 0; otherwise truncated with trunc() = −order (even order) or
// −order−1 (odd order).
LaurentSeries expand_u(const CurveConstraint& c, int order);

// A value of u: rational, or an algebraic root given by an isolating bracket.
using UValue = std::variant<Rational, Interval>;

// Numerical-equivalence identity ω̄1(ω̄1+2ω̄2)·(ω³/6) = (Θω̄²)·(ωΘ) with
// ω̄ = aΘ + b p^*H_B and ω = uΘ + v p^*H_B, both sides computed by ring
// multiplication.  For rational u the comparison is exact.  For a bracket,
// the identity holds when every component of the difference changes sign (or
// vanishes) on the bracket and is at most `tolerance` in absolute value there.
bool chow_identity_check(const BaseGeometry& g, const CurveConstraint& c, const UValue& u, const Rational& vpar,
                         const Rational& tolerance = Rational(1, 1000000) * Rational(1, 1000000) *
                                                     Rational(1, 1000000) * Rational(1, 1000000) *
                                                     Rational(1, 1000000));

// Component-wise difference LHS − RHS of the identity above as polynomials in
// (u, v): the Θp^*-coordinates followed by the fiber coefficient.
std::vector<Poly2> chow_identity_difference(const BaseGeometry& g, const CurveConstraint& c);

// True iff every component of chow_identity_difference leaves remainder zero
// on division by constraint_poly.
bool chow_identity_symbolic(const BaseGeometry& g, const CurveConstraint& c);

} // namespace fmcalc
