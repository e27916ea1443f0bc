#include "fmcalc/slopes.hpp"

#include "fmcalc/errors.hpp"

namespace fmcalc {

bool operator==(const SlopeValue& l, const SlopeValue& r) {
    if (l.is_infinite() || r.is_infinite()) return l.is_infinite() && r.is_infinite();
    return l.value() == r.value();
}

std::strong_ordering operator<=>(const SlopeValue& l, const SlopeValue& r) {
    if (l.is_infinite() && r.is_infinite()) return std::strong_ordering::equal;
    if (l.is_infinite()) return std::strong_ordering::greater;
    if (r.is_infinite()) return std::strong_ordering::less;
    int c = cmp(l.value(), r.value());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string to_string(const SlopeValue& s) {
    return s.is_infinite() ? "+inf" : to_string(s.value());
}

Rational intersect(const BaseGeometry& g, const ChernVector& v1, const ChernVector& v2) {
    return mul(g, v1, v2).s;
}

namespace {

SlopeValue quotient(const Rational& num, const Rational& den) {
    if (den == 0) return SlopeValue::plus_infinity();
    return SlopeValue::finite(Rational(num / den));
}

ChernVector ch1(const ChernVector& v) { return degree_part(v, 1); }
ChernVector ch2(const ChernVector& v) { return degree_part(v, 2); }

ChernVector H_pullback(const BaseGeometry& g) {
    return divisor_class(g, DivisorX{0, g.hb()});
}

ChernVector theta(const BaseGeometry& g) {
    return divisor_class(g, DivisorX{1, DivisorB::zero(g.rank())});
}

struct Evaluator {
    const BaseGeometry& g;
    const ChernVector& v;

    SlopeValue operator()(const slope_kind::MuOmegaB& k) const {
        ChernVector w = divisor_class(g, k.omega);
        ChernVector t = twist(g, v, k.B);
        return quotient(intersect(g, mul(g, w, w), ch1(t)), t.n);
    }
    SlopeValue operator()(const slope_kind::NuOmegaB& k) const {
        ChernVector w = divisor_class(g, k.omega);
        ChernVector w2 = mul(g, w, w);
        ChernVector t = twist(g, v, k.B);
        Rational w3 = intersect(g, w2, w);
        Rational num = intersect(g, w, ch2(t)) - w3 / 6 * t.n;
        return quotient(num, intersect(g, w2, ch1(t)));
    }
    SlopeValue operator()(const slope_kind::MuF&) const {
        return quotient(intersect(g, fiber_class(g), ch1(v)), v.n);
    }
    SlopeValue operator()(const slope_kind::MuThetaM&) const {
        ChernVector c = theta_pullback(g, g.hb()) + g.m() * fiber_class(g);
        return quotient(intersect(g, c, ch1(v)), v.n);
    }
    SlopeValue operator()(const slope_kind::MuStar&) const {
        return quotient(v.s, intersect(g, H_pullback(g), ch2(v)));
    }
    SlopeValue operator()(const slope_kind::MuStarB&) const {
        ChernVector t = twist(g, v, half_anticanonical_field(g));
        return quotient(t.s, intersect(g, H_pullback(g), ch2(t)));
    }
    SlopeValue operator()(const slope_kind::MuBar& k) const {
        ChernVector t = twist(g, v, pullback_field(k.Dbar));
        return quotient(t.s, intersect(g, divisor_class(g, k.omegabar), ch2(t)));
    }
    SlopeValue operator()(const slope_kind::MuPHBPD& k) const {
        ChernVector t = twist(g, v, pullback_field(k.D));
        return quotient(intersect(g, H_pullback(g), ch2(t)), intersect(g, theta_pullback(g, g.hb()), ch1(t)));
    }
    SlopeValue operator()(const slope_kind::MuThetaMPHBPD& k) const {
        ChernVector t = twist(g, v, pullback_field(k.D));
        ChernVector c = theta(g) + g.m() * H_pullback(g);
        return quotient(intersect(g, c, ch2(t)), intersect(g, theta_pullback(g, g.hb()), ch1(t)));
    }
    SlopeValue operator()(const slope_kind::MuOmegaPD& k) const {
        ChernVector w = divisor_class(g, k.omega);
        ChernVector t = twist(g, v, pullback_field(k.D));
        return quotient(intersect(g, w, ch2(t)), intersect(g, mul(g, w, w), ch1(t)));
    }
};

struct Namer {
    std::string operator()(const slope_kind::MuOmegaB&) const { return "MU_OMEGA_B"; }
    std::string operator()(const slope_kind::NuOmegaB&) const { return "NU_OMEGA_B"; }
    std::string operator()(const slope_kind::MuF&) const { return "MU_F"; }
    std::string operator()(const slope_kind::MuThetaM&) const { return "MU_THETA_M"; }
    std::string operator()(const slope_kind::MuStar&) const { return "MU_STAR"; }
    std::string operator()(const slope_kind::MuStarB&) const { return "MU_STAR_B"; }
    std::string operator()(const slope_kind::MuBar&) const { return "MU_BAR"; }
    std::string operator()(const slope_kind::MuPHBPD&) const { return "MU_PHB_PD"; }
    std::string operator()(const slope_kind::MuThetaMPHBPD&) const { return "MU_THETA_MPHB_PD"; }
    std::string operator()(const slope_kind::MuOmegaPD&) const { return "MU_OMEGA_PD"; }
};

} // namespace

std::string kind_name(const SlopeKind& kind) {
    return std::visit(Namer{}, kind);
}

SlopeValue slope(const BaseGeometry& g, const SlopeKind& kind, const ChernVector& v) {
    return std::visit(Evaluator{g, v}, kind);
}

Rational compute_m(const BaseGeometry& g) {
    Rational denom = g.h() + 2 * g.m0();
    if (g.m0() <= g.vprime() || denom <= 0)
        throw ConfigError("geometry.m0", "requires m0 > vprime and h + 2*m0 > 0");
    return g.m0() * g.m0() * g.H2() / denom;
}

bool is_fiber_numeric(const BaseGeometry& g, const ChernVector& v) {
    (void)g;
    if (v.n != 0 || v.x != 0 || !v.S.is_zero())
        throw DomainError("is_fiber_numeric: requires a one-dimensional class (n = x = 0, S = 0)");
    return v.eta.is_zero();
}

} // namespace fmcalc
