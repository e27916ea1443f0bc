#pragma once

#include "fmcalc/asymptotics.hpp"
#include "fmcalc/curves.hpp"
#include "fmcalc/ring.hpp"
#include "fmcalc/slopes.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fmcalc {

// Labels for the categories a class is asserted to belong to.  Only the
// numeric necessary conditions attached to a label are ever checked.
enum class ClassTag { BL_HEART, BP_HEART, FIBER_SHEAF, ONE_DIM, TP_L0, FP_L0, WIT0_PHI, WIT1_PHIHAT };

std::string to_string(ClassTag t);
// Accepts the upper-case names above; throws ConfigError("class", ...) otherwise.
ClassTag parse_class_tag(const std::string& name);

struct NumericClass {
    ClassTag tag = ClassTag::BL_HEART;
    std::optional<DivisorB> D;     // twist for BP_HEART
    bool S_effective = false;      // asserted effectivity flags
    bool eta_effective = false;
};

// Necessary conditions of the two hearts:
//   BL_HEART:    x ≥ 0;
//   BP_HEART(D): n = x = 0 and (p^*H_B)·ch2^{p^*D} ≥ 0.
// D defaults to the class's own D, then to 0.  Throws DomainError for other tags.
bool heart_necessary(const BaseGeometry& g, const ChernVector& v, const NumericClass& cls,
                     const std::optional<DivisorB>& D = std::nullopt);

// Sign condition for a WIT index on a sheaf of the dimension pattern d:
//   d = 3: x·H_B²;  d = 2 (n = x = 0): H_B·η;  d = 1 (n = x = 0, S = η = 0): s.
// WIT1 requires the value ≤ 0, WIT0 requires > 0.  Throws DomainError when v
// does not have the pattern or d, wit are out of range.
bool positivity_check(const BaseGeometry& g, const ChernVector& v, int d, int wit);

// The imaginary part of the reduced charge of Φ(E)[1] along the tilt curve:
//   Im Z̄_ω(Φ(E)[1]) = (ω³/6)/(Θω̄²) · ω̄²ch1^B(E) − u·A3(E),  B = −½p^*K_B,
// as a polynomial identity difference LHS − RHS in (u, v).
Poly2 im_identity_difference(const BaseGeometry& g, const ChernVector& E, const CurveConstraint& c);

// Evaluates the identity at (u, vpar).  Off-curve points raise DomainError
// unless `require_on_curve` is false, in which case the identity is simply
// evaluated (and generically fails).  Brackets are accepted within `tolerance`
// as for chow_identity_check.
bool im_identity_check(const BaseGeometry& g, const ChernVector& E, const CurveConstraint& c, const UValue& u,
                       const Rational& vpar, bool require_on_curve = true,
                       const Rational& tolerance = pow(Rational(1, 10), 30));

struct ThresholdReport {
    PhaseOrder order;      // compare_phases(Φ(T), Φ(E)[1]) along the tilt curve
    SlopeValue mu_T = SlopeValue::plus_infinity(); // μ_{*,B}(T)
    Rational threshold;    // 2/(a(ha+2b)H_B²) · μ_{ω̄,B}(E)
    bool strict_ok = false;    // [Prec] ⇔ [μ_T < threshold]
    bool nonstrict_ok = false; // [not Succ] ⇔ [μ_T ≤ threshold]
    bool holds() const { return strict_ok && nonstrict_ok; }
};

// Threshold criterion for sub-objects of transforms.  Requires T with
// n = x = 0, S = 0, H_B·η > 0, and E with n > 0; c a tilt curve.
ThresholdReport threshold_report(const BaseGeometry& g, const ChernVector& T, const ChernVector& E,
                                 const CurveConstraint& c, int K);
bool threshold_equiv_check(const BaseGeometry& g, const ChernVector& T, const ChernVector& E,
                           const CurveConstraint& c, int K);

struct CorrespondenceReport {
    PhaseOrder order;      // compare of the transform charges along OneDim(y, z)
    SlopeValue mu_M = SlopeValue::plus_infinity();
    SlopeValue mu_N = SlopeValue::plus_infinity();
    bool strict_ok = false;    // [μ̄(M) < μ̄(N)] ⇔ [Prec]
    bool nonstrict_ok = false; // [μ̄(M) ≤ μ̄(N)] ⇔ [not Succ]
    bool holds() const { return strict_ok && nonstrict_ok; }
};

// Slope/phase correspondence for one-dimensional classes M, N (given in
// ch^{p^*D̄} coordinates): μ̄_{ω̄,p^*D̄} with ω̄ = yΘ + z·p^*H_B against the phase
// order of their transforms.  Requires (hy+z)(H_B·η) + y·a > 0 for both.
CorrespondenceReport correspondence_report(const BaseGeometry& g, const ChernVector& M, const ChernVector& N,
                                           const Rational& y, const Rational& z, const DivisorB& Dbar, int K);
bool slope_correspondence_check(const BaseGeometry& g, const ChernVector& M, const ChernVector& N,
                                const Rational& y, const Rational& z, const DivisorB& Dbar, int K);

// For h = 0 and classes with n = x = 0, η = 0, the full charge along
// OneDim(y, z) is −s + (z/y)(H_B·S) + i·u(a − D·S), so the sign of the cross
// value does not depend on the point.  True iff the exact cross sign is the
// same at every sample and equals the predicted constant sign, and the
// asymptotic comparison agrees with it.  Throws DomainError when h ≠ 0 or the
// shape is wrong.
bool h0_independence_check(const BaseGeometry& g, const ChernVector& M, const ChernVector& N, const Rational& y,
                           const Rational& z, const DivisorB& D,
                           const std::vector<Rational>& samples = {Rational(2), Rational(10), Rational(100)});

struct OneDimTransform {
    ChernVector image;  // ch^{p^*D}(ΦE)
    DivisorB D;         // D̄ + ½K_B
    std::vector<std::pair<std::string, bool>> constraints;
    bool all_hold() const;
};

// Maps ch^{p^*D̄}(E) of a one-dimensional class (n = x = 0, S = 0) to
// ch^{p^*D}(ΦE) and reports the side conditions: on the source η ≠ 0, a ≥ 0,
// s > 0; on the image S ≠ 0, a > 0, s ≤ 0.  Throws DomainError on shape errors.
OneDimTransform onedim_transform_map(const BaseGeometry& g, const ChernVector& E_tw, const DivisorB& Dbar);

// The reverse map in the same coordinates; composing it after
// onedim_transform_map gives the negated source.
ChernVector onedim_transform_reverse(const BaseGeometry& g, const ChernVector& image_tw);

// ---------------------------------------------------------------------------
// Seeded randomized suites.

struct SuiteOptions {
    std::size_t cases = 1000;
    std::uint64_t seed = 1;
    int order = 8;
};

struct SuiteReport {
    std::string name;
    std::size_t cases = 0;
    std::size_t passed = 0;
    std::optional<std::string> counterexample; // first failing case
    std::size_t comparisons = 0; // strict verdicts compared between K and 2K
    std::size_t flips = 0;       // strict verdicts that changed between K and 2K
    std::vector<std::string> notes; // suite-specific breakdowns
    bool ok() const { return passed == cases && flips == 0; }
};

// involution, swap, chow, im-identity, threshold, correspondence, h0, phases.
const std::vector<std::string>& suite_names();

// Runs one suite, or every suite for "all".  Throws DomainError for unknown names.
std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& opts);

} // namespace fmcalc
