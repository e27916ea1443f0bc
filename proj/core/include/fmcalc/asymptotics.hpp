#pragma once

#include "fmcalc/charges.hpp"
#include "fmcalc/curves.hpp"
#include "fmcalc/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fmcalc {

// Reduced: Z̄_ω with phases in (−½, ½].  Full: Z_{ω,p^*D} with phases in (0, 1].
enum class ChargeKind { Reduced, Full };

std::string to_string(ChargeKind k);

// A central charge along a curve as germs in v → ∞.  Both parts share one
// truncation floor; `order` is the series order K of the u-expansion used.
struct AsymptoticCharge {
    LaurentSeries re;
    LaurentSeries im;
    ChargeKind kind = ChargeKind::Reduced;
    int order = 0;
};

// The exact charge polynomial of a class: reduced_charge_poly for Reduced,
// full_charge_poly with B = p^*D (D defaults to 0) for Full, which requires
// n = x = 0.
ChargePoly charge_poly(const BaseGeometry& g, const ChernVector& v, ChargeKind kind,
                       const std::optional<DivisorB>& D = std::nullopt);

// Substitutes expand_u(c, K) into a charge polynomial.
AsymptoticCharge series_from_poly(const ChargePoly& z, const CurveConstraint& c, ChargeKind kind, int K);

AsymptoticCharge charge_series(const BaseGeometry& g, const ChernVector& v, const CurveConstraint& c, ChargeKind kind,
                               int K, const std::optional<DivisorB>& D = std::nullopt);

// Side from which the phase approaches its limit: Plus from above, Minus from
// below, Exact when the phase is eventually constant.  Unresolved means the
// deciding coefficient lies beyond the truncation floor.
enum class Side { Plus, Minus, Exact, Unresolved };

std::string to_string(Side s);

struct PhaseLimit {
    // Limit of arg(Z)/π.  Empty when the dominant direction is oblique with an
    // irrational angle, or when no coefficient of either part is known.
    std::optional<Rational> limit;
    // Floating-point value of the limit (NaN when unknown).
    double approx = 0;
    // For oblique limits: the tangent of the limiting angle.
    std::optional<Rational> tangent;
    Side side = Side::Unresolved;

    std::string str() const;
};

// Limit of the phase from the leading exponents and signs of re and im.
// An exactly zero Reduced charge has the fixed phase ½ (side Exact); an exactly
// zero Full charge raises IndeterminatePhase.
PhaseLimit phase_limit(const AsymptoticCharge& ac);

struct PhaseOrder {
    enum class Kind { Prec, Succ, EqualThroughOrder, ExactEqual };
    Kind kind = Kind::ExactEqual;
    int order = 0; // the K reported with EqualThroughOrder

    bool is_strict() const { return kind == Kind::Prec || kind == Kind::Succ; }
    friend bool operator==(const PhaseOrder& l, const PhaseOrder& r) {
        return l.kind == r.kind && (l.kind != Kind::EqualThroughOrder || l.order == r.order);
    }
    std::string str() const;
};

// The cross series X = re(M)·im(N) − im(M)·re(N).
LaurentSeries cross_series(const AsymptoticCharge& M, const AsymptoticCharge& N);

// Sign of the leading coefficient of the cross series: positive → Prec (φ(M) ≺
// φ(N)), negative → Succ.  ExactEqual when X is the exact zero series or both
// operands are the same stored data; otherwise EqualThroughOrder(order).
// Reduced zero charges are given the phase ½ first.  Throws DomainError when
// the kinds differ.
PhaseOrder compare_phases(const AsymptoticCharge& M, const AsymptoticCharge& N);

// Comparison from exact charge polynomials.  ExactEqual when the polynomial
// cross is zero or is divisible by the curve equation (so it vanishes on the
// curve identically); otherwise the series comparison at order K, escalated
// once to 2K when it ties and `escalate` is set.
PhaseOrder compare_charge_polys(const ChargePoly& M, const ChargePoly& N, const CurveConstraint& c, ChargeKind kind,
                                int K, bool escalate = true);

PhaseOrder compare_phases(const BaseGeometry& g, const ChernVector& M, const ChernVector& N,
                          const CurveConstraint& c, ChargeKind kind, int K,
                          const std::optional<DivisorB>& D = std::nullopt, bool escalate = true);

// The exact cross polynomial re_M·im_N − im_M·re_N in (u, v).
Poly2 cross_poly(const ChargePoly& M, const ChargePoly& N);

// Exact sign of a polynomial at the point (u(v), v) of the curve, where u(v)
// is the root chosen by solve_u.  Refines the root until the sign is certain;
// returns 0 when the point is an exact common zero.
int sign_on_curve(const Poly2& f, const CurveConstraint& c, const Rational& vpar);

struct WallScan {
    // Brackets of width <= precision, in ascending order.
    std::vector<Interval> walls;
    // The cross vanishes identically along the curve: no walls are reported.
    bool degenerate = false;
};

// Finite v in [vlo, vhi] at which the exact cross value changes sign along the
// curve.  The range is sampled (geometrically for wide positive ranges) and
// each sign change is bisected; samples outside the curve's domain are skipped.
WallScan wall_scan(const BaseGeometry& g, const ChernVector& M, const ChernVector& N, const CurveConstraint& c,
                   ChargeKind kind, const Rational& vlo, const Rational& vhi, const Rational& precision,
                   const std::optional<DivisorB>& D = std::nullopt);

// Same, from exact charge polynomials.
WallScan wall_scan(const ChargePoly& M, const ChargePoly& N, const CurveConstraint& c, const Rational& vlo,
                   const Rational& vhi, const Rational& precision);

} // namespace fmcalc
