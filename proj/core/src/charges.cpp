#include "fmcalc/charges.hpp"

#include "fmcalc/errors.hpp"
#include "fmcalc/slopes.hpp"

namespace fmcalc {

namespace {

void require_positive(const Rational& u, const Rational& v) {
    if (u <= 0 || v <= 0) throw DomainError("polarization coefficients must be positive");
}

void require_onedim(const ChernVector& v) {
    if (v.n != 0 || v.x != 0 || !v.S.is_zero())
        throw DomainError("requires a one-dimensional class (n = x = 0, S = 0)");
}

Poly2 C(const Rational& c) { return Poly2::constant(c); }

} // namespace

ChargeValue full_charge(const BaseGeometry& g, const ChernVector& v, const DivisorX& omega, const DivisorX& B) {
    ChernVector w = divisor_class(g, omega);
    ChernVector w2 = mul(g, w, w);
    ChernVector t = twist(g, v, B);
    Rational w3 = intersect(g, w2, w);
    ChargeValue z;
    z.re = -t.s + intersect(g, w2, degree_part(t, 1)) / 2;
    z.im = intersect(g, w, degree_part(t, 2)) - w3 / 6 * t.n;
    return z;
}

ChargeValue reduced_charge_ring(const BaseGeometry& g, const ChernVector& v, const Rational& u, const Rational& vpar) {
    ChernVector w = divisor_class(g, polarization(g, u, vpar));
    ChernVector w2 = mul(g, w, w);
    Rational w3 = intersect(g, w2, w);
    ChargeValue z;
    z.re = intersect(g, w2, degree_part(v, 1)) / 2;
    z.im = intersect(g, w, degree_part(v, 2)) - w3 / 6 * v.n;
    return z;
}

ChargePoly reduced_charge_poly(const BaseGeometry& g, const ChernVector& v) {
    const Rational& h = g.h();
    const Poly2 U = Poly2::u(), V = Poly2::v();
    const Poly2 hu = h * U;
    Poly2 omega2_theta = hu * (hu + Rational(2) * V) + V * V; // ω²·Θ / H_B²
    Poly2 omega2_base = U * (hu + Rational(2) * V);           // ω²·p^*S / (H_B·S)
    Poly2 omega3_6 = Rational(1, 6) * U * (hu * hu + Rational(3) * hu * V + Rational(3) * V * V);
    ChargePoly z;
    z.re = Rational(g.H2() * v.x / 2) * omega2_theta + Rational(dot_H(g, v.S) / 2) * omega2_base;
    z.im = dot_H(g, v.eta) * (hu + V) + v.a * U - Rational(g.H2() * v.n) * omega3_6;
    return z;
}

ChargeValue reduced_charge(const BaseGeometry& g, const ChernVector& v, const Rational& u, const Rational& vpar) {
    require_positive(u, vpar);
    ChargeValue ring = reduced_charge_ring(g, v, u, vpar);
    ChargeValue closed = reduced_charge_poly(g, v).eval(u, vpar);
    if (!(ring == closed))
        throw ComputationFault("reduced_charge: ring and closed-form evaluations disagree");
    return ring;
}

ChargePoly full_charge_poly(const BaseGeometry& g, const ChernVector& v, const DivisorB& D) {
    if (v.n != 0 || v.x != 0) throw DomainError("full_charge_poly: requires n = 0 and x = 0");
    const Rational& h = g.h();
    const Poly2 U = Poly2::u(), V = Poly2::v();
    ChargePoly z;
    z.re = C(Rational(-(v.s - pair(g, D, v.eta)))) +
           Rational(dot_H(g, v.S) / 2) * (U * (h * U + Rational(2) * V));
    z.im = dot_H(g, v.eta) * (h * U + V) + Rational(v.a - pair(g, D, v.S)) * U;
    return z;
}

ChargePoly onedim_transform_charge_poly(const BaseGeometry& g, const ChernVector& v1dim, const DivisorB& Dbar) {
    require_onedim(v1dim);
    const Poly2 U = Poly2::u(), V = Poly2::v();
    ChargePoly z;
    z.re = C(v1dim.a) + Rational(dot_H(g, v1dim.eta) / 2) * (U * (g.h() * U + Rational(2) * V));
    z.im = Rational(v1dim.s - pair(g, Dbar, v1dim.eta)) * U;
    return z;
}

ChargeValue onedim_transform_charge(const BaseGeometry& g, const ChernVector& v1dim, const Rational& y,
                                    const Rational& z, const Rational& u, const Rational& vpar,
                                    const DivisorB& Dbar) {
    require_positive(u, vpar);
    if (y <= 0 || z <= 0) throw DomainError("onedim_transform_charge: y and z must be positive");
    return onedim_transform_charge_poly(g, v1dim, Dbar).eval(u, vpar);
}

ChargeValue onedim_transform_charge_on_curve(const BaseGeometry& g, const ChernVector& v1dim, const Rational& y,
                                             const Rational& z, const Rational& u, const DivisorB& Dbar) {
    require_onedim(v1dim);
    if (y <= 0 || z <= 0) throw DomainError("onedim_transform_charge_on_curve: y and z must be positive");
    const Rational Heta = dot_H(g, v1dim.eta);
    ChargeValue r;
    r.re = ((g.h() * y + z) * Heta + y * v1dim.a) / y;
    r.im = y * u * (v1dim.s - pair(g, Dbar, v1dim.eta)) / y;
    return r;
}

} // namespace fmcalc
