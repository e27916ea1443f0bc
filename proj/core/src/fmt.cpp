#include "fmcalc/fmt.hpp"

#include "fmcalc/errors.hpp"

namespace fmcalc {

ChernVector phi(const BaseGeometry& g, const ChernVector& v) {
    const Rational& h = g.h();
    const Rational K2 = h * h * g.H2();
    const DivisorB& H = g.hb();
    ChernVector r = ChernVector::zero(g.rank());
    r.n = v.x;
    r.x = -v.n;
    r.S = v.eta + Rational(v.x * h / 2) * H;
    r.eta = -(v.S + Rational(v.n * h / 2) * H);
    r.a = v.s + h * dot_H(g, v.eta) / 2 + v.x * K2 / 8 - v.x * K2 / 24;
    r.s = -(v.a + h * dot_H(g, v.S) / 2 + v.n * K2 / 8) - v.n * K2 / 24;
    return r;
}

ChernVector phi_hat(const BaseGeometry& g, const ChernVector& v) {
    const Rational& h = g.h();
    const Rational K2 = h * h * g.H2();
    const DivisorB& H = g.hb();
    ChernVector r = ChernVector::zero(g.rank());
    r.n = v.x;
    r.x = -v.n;
    r.S = v.eta - Rational(v.x * h / 2) * H;
    r.eta = Rational(v.n * h / 2) * H - v.S;
    r.a = v.s - h * dot_H(g, v.eta) / 2 + v.x * K2 / 12;
    r.s = -v.n * K2 / 6 - v.a + h * dot_H(g, v.S) / 2;
    return r;
}

ChernVector fiber_swap_rule(const BaseGeometry& g, const ChernVector& tw) {
    if (tw.n != 0 || tw.x != 0)
        throw DomainError("fiber_swap_rule: requires n = 0 and x = 0 (class of fiber degree zero)");
    ChernVector r = ChernVector::zero(g.rank());
    r.S = tw.eta;
    r.eta = -tw.S;
    r.a = tw.s;
    r.s = -tw.a;
    return r;
}

} // namespace fmcalc
