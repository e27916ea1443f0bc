#include "fmcalc/asymptotics.hpp"

#include "fmcalc/errors.hpp"

#include <cmath>
#include <limits>

namespace fmcalc {

std::string to_string(ChargeKind k) { return k == ChargeKind::Reduced ? "reduced" : "full"; }

std::string to_string(Side s) {
    switch (s) {
    case Side::Plus: return "plus";
    case Side::Minus: return "minus";
    case Side::Exact: return "exact";
    case Side::Unresolved: return "unresolved";
    }
    return "unresolved";
}

std::string PhaseLimit::str() const {
    std::string l;
    if (limit) l = to_string(*limit);
    else if (std::isnan(approx)) l = "?";
    else l = "atan(" + to_string(*tangent) + ")/pi";
    return l + " " + to_string(side);
}

std::string PhaseOrder::str() const {
    switch (kind) {
    case Kind::Prec: return "prec";
    case Kind::Succ: return "succ";
    case Kind::EqualThroughOrder: return "equal-through-order(" + std::to_string(order) + ")";
    case Kind::ExactEqual: return "exact-equal";
    }
    return "";
}

ChargePoly charge_poly(const BaseGeometry& g, const ChernVector& v, ChargeKind kind,
                       const std::optional<DivisorB>& D) {
    if (kind == ChargeKind::Reduced) return reduced_charge_poly(g, v);
    return full_charge_poly(g, v, D ? *D : DivisorB::zero(g.rank()));
}

AsymptoticCharge series_from_poly(const ChargePoly& z, const CurveConstraint& c, ChargeKind kind, int K) {
    const LaurentSeries u = expand_u(c, K);
    AsymptoticCharge ac;
    ac.kind = kind;
    ac.order = K;
    ac.re = substitute(z.re, u);
    ac.im = substitute(z.im, u);
    // Share one floor between the inexact parts; exact parts stay exact.
    long floor = LaurentSeries::kExact;
    for (const LaurentSeries* s : {&ac.re, &ac.im})
        if (!s->is_exact()) floor = std::max(floor, s->trunc());
    if (floor != LaurentSeries::kExact) {
        if (!ac.re.is_exact()) ac.re = ac.re.truncated(floor);
        if (!ac.im.is_exact()) ac.im = ac.im.truncated(floor);
    }
    return ac;
}

AsymptoticCharge charge_series(const BaseGeometry& g, const ChernVector& v, const CurveConstraint& c, ChargeKind kind,
                               int K, const std::optional<DivisorB>& D) {
    if (c.h() != g.h()) throw DomainError("charge_series: curve and geometry disagree on h");
    return series_from_poly(charge_poly(g, v, kind, D), c, kind, K);
}

namespace {

// a dominates b: the order of a is certainly larger than the order of b.
bool dominates(const LaurentSeries& a, const LaurentSeries& b) {
    if (!a.has_terms()) return false;
    if (b.is_exact_zero()) return true;
    return a.lead_exponent() > b.top();
}

Side side_of(const LaurentSeries& cross) {
    std::optional<int> s = cross.sign();
    if (!s) return Side::Unresolved;
    return *s > 0 ? Side::Plus : *s < 0 ? Side::Minus : Side::Exact;
}

} // namespace

PhaseLimit phase_limit(const AsymptoticCharge& ac) {
    PhaseLimit pl;
    if (ac.re.is_exact_zero() && ac.im.is_exact_zero()) {
        if (ac.kind == ChargeKind::Full) throw IndeterminatePhase("phase_limit: both parts of the charge vanish");
        pl.limit = Rational(1, 2);
        pl.approx = 0.5;
        pl.side = Side::Exact;
        return pl;
    }
    if (dominates(ac.re, ac.im)) {
        int s = sign(ac.re.lead_coeff());
        pl.limit = s > 0 ? Rational(0) : Rational(1);
        pl.side = side_of(Rational(s) * ac.im);
    } else if (dominates(ac.im, ac.re)) {
        int s = sign(ac.im.lead_coeff());
        pl.limit = Rational(s, 2);
        pl.side = side_of(Rational(-s) * ac.re);
    } else if (ac.re.has_terms() && ac.im.has_terms() && ac.re.lead_exponent() == ac.im.lead_exponent()) {
        const Rational& cr = ac.re.lead_coeff();
        const Rational& ci = ac.im.lead_coeff();
        pl.tangent = ci / cr;
        if (abs(cr) == abs(ci)) {
            if (cr > 0) pl.limit = Rational(sign(ci), 4);
            else pl.limit = Rational(sign(ci) * 3, 4);
        }
        pl.approx = std::atan2(to_double(ci), to_double(cr)) / std::acos(-1.0);
        pl.side = side_of(cr * ac.im - ci * ac.re);
        if (pl.limit) pl.approx = to_double(*pl.limit);
        return pl;
    } else {
        pl.approx = std::numeric_limits<double>::quiet_NaN();
        pl.side = Side::Unresolved;
        return pl;
    }
    pl.approx = to_double(*pl.limit);
    return pl;
}

LaurentSeries cross_series(const AsymptoticCharge& M, const AsymptoticCharge& N) {
    return M.re * N.im - M.im * N.re;
}

namespace {

AsymptoticCharge with_fixed_phase(const AsymptoticCharge& ac) {
    if (ac.kind != ChargeKind::Reduced || !ac.re.is_exact_zero() || !ac.im.is_exact_zero()) return ac;
    AsymptoticCharge r = ac;
    r.im = LaurentSeries::constant(1);
    return r;
}

ChargePoly with_fixed_phase(const ChargePoly& z, ChargeKind kind) {
    if (kind != ChargeKind::Reduced || !z.re.is_zero() || !z.im.is_zero()) return z;
    return {Poly2(), Poly2::constant(1)};
}

} // namespace

PhaseOrder compare_phases(const AsymptoticCharge& Min, const AsymptoticCharge& Nin) {
    if (Min.kind != Nin.kind) throw DomainError("compare_phases: charges of different kinds");
    const AsymptoticCharge M = with_fixed_phase(Min);
    const AsymptoticCharge N = with_fixed_phase(Nin);
    PhaseOrder r;
    if (M.re == N.re && M.im == N.im) return r;
    const LaurentSeries X = cross_series(M, N);
    std::optional<int> s = X.sign();
    if (!s) {
        r.kind = PhaseOrder::Kind::EqualThroughOrder;
        r.order = std::min(M.order, N.order);
    } else if (*s > 0) {
        r.kind = PhaseOrder::Kind::Prec;
    } else if (*s < 0) {
        r.kind = PhaseOrder::Kind::Succ;
    }
    return r;
}

Poly2 cross_poly(const ChargePoly& M, const ChargePoly& N) { return M.re * N.im - M.im * N.re; }

namespace {

bool vanishes_on_curve(const Poly2& f, const CurveConstraint& c) {
    return f.is_zero() || Poly2::divide(f, constraint_poly(c)).second.is_zero();
}

} // namespace

PhaseOrder compare_charge_polys(const ChargePoly& Min, const ChargePoly& Nin, const CurveConstraint& c, ChargeKind kind,
                                int K, bool escalate) {
    const ChargePoly M = with_fixed_phase(Min, kind);
    const ChargePoly N = with_fixed_phase(Nin, kind);
    if (vanishes_on_curve(cross_poly(M, N), c)) return PhaseOrder{};
    PhaseOrder r = compare_phases(series_from_poly(M, c, kind, K), series_from_poly(N, c, kind, K));
    if (r.kind == PhaseOrder::Kind::EqualThroughOrder && escalate)
        r = compare_phases(series_from_poly(M, c, kind, 2 * K), series_from_poly(N, c, kind, 2 * K));
    return r;
}

PhaseOrder compare_phases(const BaseGeometry& g, const ChernVector& M, const ChernVector& N,
                          const CurveConstraint& c, ChargeKind kind, int K, const std::optional<DivisorB>& D,
                          bool escalate) {
    if (c.h() != g.h()) throw DomainError("compare_phases: curve and geometry disagree on h");
    return compare_charge_polys(charge_poly(g, M, kind, D), charge_poly(g, N, kind, D), c, kind, K, escalate);
}

int sign_on_curve(const Poly2& f, const CurveConstraint& c, const Rational& vpar) {
    if (c.h() == 0) return sign(f.eval(c.u1() / vpar, vpar));
    const Poly1 F = f.at_v(vpar);
    if (F.is_zero()) return 0;
    const Poly1 P = constraint_poly(c).at_v(vpar);
    Interval iv = solve_u(c, vpar, pow2(-64));
    bool checked_common_root = false;
    for (;;) {
        if (iv.exact()) return F.sign_at(iv.lo);
        Interval e = F.eval(iv);
        if (e.lo > 0) return 1;
        if (e.hi < 0) return -1;
        if (!checked_common_root) {
            // The bracket isolates one root of P; if F shares it, the value is exactly 0.
            Poly1 common = Poly1::gcd(F, P);
            if (common.degree() >= 1 && !isolate_roots(common, iv.lo, iv.hi).empty()) return 0;
            checked_common_root = true;
        }
        iv = refine_root(P, iv, iv.width() * pow2(-32));
    }
}

WallScan wall_scan(const ChargePoly& Min, const ChargePoly& Nin, const CurveConstraint& c, const Rational& vlo,
                   const Rational& vhi, const Rational& precision) {
    WallScan out;
    const Poly2 X = cross_poly(Min, Nin);
    if (vanishes_on_curve(X, c)) {
        out.degenerate = true;
        return out;
    }
    if (!(vlo < vhi) || precision <= 0) return out;

    constexpr int kSteps = 64;
    std::vector<Rational> vs;
    if (vlo > 0 && vhi / vlo >= 16) {
        const double llo = std::log(to_double(vlo)), lhi = std::log(to_double(vhi));
        vs.push_back(vlo);
        for (int i = 1; i < kSteps; ++i) {
            Rational v(std::exp(llo + (lhi - llo) * i / kSteps));
            if (v > vs.back() && v < vhi) vs.push_back(v);
        }
        vs.push_back(vhi);
    } else {
        for (int i = 0; i <= kSteps; ++i) vs.push_back(vlo + (vhi - vlo) * Rational(i) / kSteps);
    }

    auto sample = [&](const Rational& v) -> std::optional<int> {
        if (v <= 0) return std::nullopt;
        try {
            return sign_on_curve(X, c, v);
        } catch (const CurveDomainError&) {
            return std::nullopt;
        }
    };

    std::vector<std::optional<int>> signs;
    for (const auto& v : vs) signs.push_back(sample(v));

    bool any_nonzero = false;
    bool any_valid = false;
    for (const auto& s : signs) {
        any_valid = any_valid || s.has_value();
        any_nonzero = any_nonzero || (s && *s != 0);
    }
    if (any_valid && !any_nonzero) {
        out.degenerate = true;
        return out;
    }

    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (signs[i] && *signs[i] == 0) out.walls.push_back({vs[i], vs[i]});
        if (i + 1 == vs.size() || !signs[i] || !signs[i + 1] || *signs[i] * *signs[i + 1] >= 0) continue;
        Rational lo = vs[i], hi = vs[i + 1];
        const int slo = *signs[i];
        bool exact_hit = false, lost = false;
        while (hi - lo > precision) {
            Rational mid = (lo + hi) / 2;
            std::optional<int> sm = sample(mid);
            if (!sm) {
                lost = true;
                break;
            }
            if (*sm == 0) {
                out.walls.push_back({mid, mid});
                exact_hit = true;
                break;
            }
            (*sm == slo ? lo : hi) = mid;
        }
        if (!exact_hit && !lost) out.walls.push_back({lo, hi});
    }
    return out;
}

WallScan wall_scan(const BaseGeometry& g, const ChernVector& M, const ChernVector& N, const CurveConstraint& c,
                   ChargeKind kind, const Rational& vlo, const Rational& vhi, const Rational& precision,
                   const std::optional<DivisorB>& D) {
    if (c.h() != g.h()) throw DomainError("wall_scan: curve and geometry disagree on h");
    return wall_scan(charge_poly(g, M, kind, D), charge_poly(g, N, kind, D), c, vlo, vhi, precision);
}

} // namespace fmcalc
