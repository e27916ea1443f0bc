#include "fmcalc/curves.hpp"

#include "fmcalc/errors.hpp"
#include "fmcalc/slopes.hpp"

namespace fmcalc {

CurveConstraint CurveConstraint::tilt(const Rational& h, const Rational& a, const Rational& b) {
    if (a <= 0) throw ConfigError("curve.a", "must be positive");
    if (b <= 0) throw ConfigError("curve.b", "must be positive");
    if (h * a + 2 * b <= 0) throw ConfigError("curve.b", "requires h*a + 2*b > 0");
    if (h * a + b == 0) throw ConfigError("curve.b", "requires h*a + b != 0");
    return CurveConstraint(Type::Tilt, h, a, b);
}

CurveConstraint CurveConstraint::onedim(const Rational& h, const Rational& y, const Rational& z) {
    if (y <= 0) throw ConfigError("curve.y", "must be positive");
    if (z <= 0) throw ConfigError("curve.z", "must be positive");
    if (h + z / y <= 0) throw ConfigError("curve.z", "requires h + z/y > 0");
    return CurveConstraint(Type::OneDim, h, y, z);
}

Rational CurveConstraint::u1() const {
    if (is_tilt()) {
        Rational s = h_ * p1_ + p2_;
        return 2 * s * s / (p1_ * (h_ * p1_ + 2 * p2_));
    }
    return h_ + p2_ / p1_;
}

std::string CurveConstraint::str() const {
    if (is_tilt()) return "tilt(a=" + to_string(p1_) + ", b=" + to_string(p2_) + ", h=" + to_string(h_) + ")";
    return "onedim(y=" + to_string(p1_) + ", z=" + to_string(p2_) + ", h=" + to_string(h_) + ")";
}

Poly2 constraint_poly(const CurveConstraint& c) {
    const Rational& h = c.h();
    const Poly2 U = Poly2::u(), V = Poly2::v();
    const Poly2 hu = h * U;
    if (c.is_tilt()) {
        const Rational& a = c.p1();
        const Rational& b = c.p2();
        Rational K = a * (h * a + 2 * b);
        Rational L = (h * a + b) * (h * a + b);
        Poly2 cubic = Rational(1, 6) * U * (hu * hu + Rational(3) * hu * V + Rational(3) * V * V);
        return K * cubic - L * (hu + V);
    }
    return Rational(1, 2) * U * (hu + Rational(2) * V) - Poly2::constant(Rational(h + c.p2() / c.p1()));
}

Interval solve_u(const CurveConstraint& c, const Rational& vpar, const Rational& precision) {
    if (vpar <= 0) throw CurveDomainError("solve_u: vpar must be positive");
    if (precision <= 0) throw DomainError("solve_u: precision must be positive");
    const Rational target = c.u1() / vpar;
    if (c.h() == 0) return {target, target};
    Poly1 p = constraint_poly(c).at_v(vpar);
    std::vector<Interval> roots = isolate_roots(p, Rational(0), root_bound(p));
    if (roots.empty()) throw CurveDomainError("solve_u: no positive root for vpar = " + to_string(vpar));
    Interval best;
    Rational best_dist = -1;
    for (auto& r : roots) {
        r = refine_root(p, r, precision);
        Rational d = abs(Rational(r.mid() - target));
        if (best_dist < 0 || d < best_dist) {
            best = r;
            best_dist = d;
        }
    }
    return best;
}

namespace {

Poly2 derivative_u(const Poly2& p) {
    Poly2 d;
    for (const auto& [e, c] : p.terms())
        if (e.first > 0) d += Poly2::monomial(c * e.first, e.first - 1, e.second);
    return d;
}

} // namespace

LaurentSeries expand_u(const CurveConstraint& c, int order) {
    if (order < 1) throw DomainError("expand_u: order must be positive");
    const Rational u1 = c.u1();
    if (c.h() == 0) return LaurentSeries::monomial(u1, -1);

    // Chord iteration u ← u − P(u, v)/(c·v^d), where c·v^d is the leading term
    // of ∂P/∂u along the curve; each pass fixes at least one more coefficient.
    const Poly2 P = constraint_poly(c);
    const long floor = -static_cast<long>(order) - 2;
    LaurentSeries u = LaurentSeries::monomial(u1, -1, floor);
    LaurentSeries du = substitute(derivative_u(P), u);
    const long d = du.lead_exponent();
    const Rational inv = 1 / du.lead_coeff();
    for (int pass = 0; pass < order + 4; ++pass) {
        LaurentSeries r = substitute(P, u);
        u -= (inv * r).shifted(-d);
        u = u.truncated(floor);
    }
    // Only odd powers occur, so for odd order the next coefficient is zero.
    long keep = -static_cast<long>(order);
    std::vector<std::pair<long, Rational>> terms;
    for (const auto& [e, k] : u.terms())
        if (e >= keep) terms.emplace_back(e, k);
    return LaurentSeries::from_terms(terms, order % 2 == 0 ? keep : keep - 1);
}

Poly2 omega_cube_sixth(const BaseGeometry& g) {
    // ω³ = Σ C(3,k) u^{3−k} v^k Θ^{3−k}(p^*H_B)^k.
    const ChernVector theta = divisor_class(g, DivisorX{1, DivisorB::zero(g.rank())});
    const ChernVector H = divisor_class(g, DivisorX{0, g.hb()});
    const ChernVector tt = mul(g, theta, theta), th = mul(g, theta, H), hh = mul(g, H, H);
    const Rational n30 = intersect(g, tt, theta), n21 = intersect(g, tt, H);
    const Rational n12 = intersect(g, th, H), n03 = intersect(g, hh, H);
    return Rational(1, 6) * (Poly2::monomial(n30, 3, 0) + Poly2::monomial(3 * n21, 2, 1) +
                             Poly2::monomial(3 * n12, 1, 2) + Poly2::monomial(n03, 0, 3));
}

bool bracket_vanishes(const Poly1& p, const Interval& iv, const Rational& tolerance) {
    if (p.is_zero()) return true;
    if (p.sign_at(iv.lo) * p.sign_at(iv.hi) > 0) return false;
    return abs(p.eval(iv.lo)) <= tolerance && abs(p.eval(iv.hi)) <= tolerance;
}

namespace {

struct ChowSides {
    ChernVector lhs;
    ChernVector rhs;
};

void require_tilt(const BaseGeometry& g, const CurveConstraint& c) {
    if (!c.is_tilt()) throw DomainError("chow identity: requires a tilt curve");
    if (c.h() != g.h()) throw DomainError("chow identity: curve and geometry disagree on h");
}

ChowSides chow_sides(const BaseGeometry& g, const CurveConstraint& c, const Rational& u, const Rational& vpar) {
    const ChernVector theta = divisor_class(g, DivisorX{1, DivisorB::zero(g.rank())});
    const ChernVector wbar1 = divisor_class(g, DivisorX{c.p1(), DivisorB::zero(g.rank())});
    const ChernVector wbar2 = divisor_class(g, DivisorX{0, c.p2() * g.hb()});
    const ChernVector wbar = wbar1 + wbar2;
    const ChernVector w = divisor_class(g, polarization(g, u, vpar));
    Rational w3_6 = intersect(g, mul(g, w, w), w) / 6;
    Rational theta_wbar2 = intersect(g, theta, mul(g, wbar, wbar));
    ChowSides sides;
    sides.lhs = w3_6 * mul(g, wbar1, wbar1 + Rational(2) * wbar2);
    sides.rhs = theta_wbar2 * mul(g, w, theta);
    return sides;
}

} // namespace

std::vector<Poly2> chow_identity_difference(const BaseGeometry& g, const CurveConstraint& c) {
    require_tilt(g, c);
    const std::size_t r = g.rank();
    const DivisorB zero = DivisorB::zero(r);
    const ChernVector theta = divisor_class(g, DivisorX{1, zero});
    const ChernVector H = divisor_class(g, DivisorX{0, g.hb()});
    const ChernVector wbar1 = c.p1() * theta;
    const ChernVector wbar2 = c.p2() * H;
    const ChernVector wbar = wbar1 + wbar2;

    const ChernVector tt = mul(g, theta, theta), th = mul(g, theta, H);
    const Poly2 w3_6 = omega_cube_sixth(g);
    const ChernVector lhs_class = mul(g, wbar1, wbar1 + Rational(2) * wbar2);
    const Rational theta_wbar2 = intersect(g, theta, mul(g, wbar, wbar));

    std::vector<Poly2> diff;
    for (std::size_t k = 0; k < r; ++k) {
        Poly2 lhs = lhs_class.eta.coords[k] * w3_6;
        Poly2 rhs = theta_wbar2 * (Poly2::monomial(tt.eta.coords[k], 1, 0) + Poly2::monomial(th.eta.coords[k], 0, 1));
        diff.push_back(lhs - rhs);
    }
    Poly2 lhs_f = lhs_class.a * w3_6;
    Poly2 rhs_f = theta_wbar2 * (Poly2::monomial(tt.a, 1, 0) + Poly2::monomial(th.a, 0, 1));
    diff.push_back(lhs_f - rhs_f);
    return diff;
}

bool chow_identity_symbolic(const BaseGeometry& g, const CurveConstraint& c) {
    const Poly2 P = constraint_poly(c);
    for (const auto& d : chow_identity_difference(g, c))
        if (!Poly2::divide(d, P).second.is_zero()) return false;
    return true;
}

bool chow_identity_check(const BaseGeometry& g, const CurveConstraint& c, const UValue& u, const Rational& vpar,
                         const Rational& tolerance) {
    require_tilt(g, c);
    if (vpar <= 0) throw DomainError("chow_identity_check: vpar must be positive");
    if (const Rational* q = std::get_if<Rational>(&u)) {
        if (*q <= 0) throw DomainError("chow_identity_check: u must be positive");
        ChowSides s = chow_sides(g, c, *q, vpar);
        return s.lhs == s.rhs;
    }
    const Interval& iv = std::get<Interval>(u);
    if (iv.lo <= 0) throw DomainError("chow_identity_check: u must be positive");
    for (const auto& d : chow_identity_difference(g, c))
        if (!bracket_vanishes(d.at_v(vpar), iv, tolerance)) return false;
    return true;
}

} // namespace fmcalc
