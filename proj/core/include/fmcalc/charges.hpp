#pragma once

#include "fmcalc/poly.hpp"
#include "fmcalc/ring.hpp"

namespace fmcalc {

// An exact complex number re + i·im.
struct ChargeValue {
    Rational re;
    Rational im;

    friend bool operator==(const ChargeValue& l, const ChargeValue& r) { return l.re == r.re && l.im == r.im; }
};

// A charge as a pair of polynomials in the polarization coefficients (u, v).
struct ChargePoly {
    Poly2 re;
    Poly2 im;

    ChargeValue eval(const Rational& u, const Rational& v) const { return {re.eval(u, v), im.eval(u, v)}; }
};

// Reduced charge ½ω²ch1 + i(ω·ch2 − (ω³/6)ch0) with ω = uΘ + v·p^*H_B.
// Evaluated both by ring multiplication and by the closed form; a mismatch
// raises ComputationFault.  Requires u, v > 0.
ChargeValue reduced_charge(const BaseGeometry& g, const ChernVector& v, const Rational& u, const Rational& vpar);

// Ring-multiplication path of reduced_charge alone.
ChargeValue reduced_charge_ring(const BaseGeometry& g, const ChernVector& v, const Rational& u, const Rational& vpar);

// Closed form of the reduced charge as polynomials in (u, v).
ChargePoly reduced_charge_poly(const BaseGeometry& g, const ChernVector& v);

// Full twisted charge −ch3^B + ½ω²ch1^B + i(ω·ch2^B − (ω³/6)ch0^B).
ChargeValue full_charge(const BaseGeometry& g, const ChernVector& v, const DivisorX& omega, const DivisorX& B);

// Closed form of the full charge with B = p^*D for classes with n = x = 0:
//   −(s − D·η) + ½u(hu+2v)(H_B·S) + i((hu+v)(H_B·η) + u(a − D·S)).
ChargePoly full_charge_poly(const BaseGeometry& g, const ChernVector& v, const DivisorB& D);

// Charge of the transform of a one-dimensional class (n = x = 0, S = 0):
//   a + ½u(hu+2v)(H_B·η) + i·u(s − D̄·η).
// The curve parameters (y, z) do not enter the value; they are validated only.
ChargeValue onedim_transform_charge(const BaseGeometry& g, const ChernVector& v1dim, const Rational& y,
                                    const Rational& z, const Rational& u, const Rational& vpar,
                                    const DivisorB& Dbar);

ChargePoly onedim_transform_charge_poly(const BaseGeometry& g, const ChernVector& v1dim, const DivisorB& Dbar);

// The (1/y)-factored form valid on the one-dimensional curve:
//   (1/y)((hy+z)(H_B·η) + y·a + i·y·u(s − D̄·η)).
ChargeValue onedim_transform_charge_on_curve(const BaseGeometry& g, const ChernVector& v1dim, const Rational& y,
                                             const Rational& z, const Rational& u, const DivisorB& Dbar);

} // namespace fmcalc
