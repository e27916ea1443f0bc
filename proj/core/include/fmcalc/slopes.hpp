#pragma once

#include "fmcalc/ring.hpp"

#include <compare>
#include <optional>
#include <string>
#include <variant>

namespace fmcalc {

// Slope value in Q ∪ {+∞}.  +∞ compares above every finite value and equal to itself.
class SlopeValue {
public:
    static SlopeValue finite(Rational q) { return SlopeValue(std::move(q)); }
    static SlopeValue plus_infinity() { return SlopeValue(); }

    bool is_infinite() const { return !value_.has_value(); }
    // Precondition: !is_infinite().
    const Rational& value() const { return *value_; }

    friend bool operator==(const SlopeValue& l, const SlopeValue& r);
    friend std::strong_ordering operator<=>(const SlopeValue& l, const SlopeValue& r);

private:
    SlopeValue() = default;
    explicit SlopeValue(Rational q) : value_(std::move(q)) {}
    std::optional<Rational> value_;
};

std::string to_string(const SlopeValue& s);

// Slope kinds and their parameters.
namespace slope_kind {
struct MuOmegaB { DivisorX omega; DivisorX B; };        // ω²ch1^B / ch0
struct NuOmegaB { DivisorX omega; DivisorX B; };        // (ω ch2^B − ω³/6 ch0) / ω²ch1^B
struct MuF {};                                           // f·ch1 / ch0
struct MuThetaM {};                                      // (Θp^*H_B + m f)·ch1 / ch0
struct MuStar {};                                        // ch3 / (p^*H_B·ch2)
struct MuStarB {};                                       // same for ch^B, B = −½p^*K_B
struct MuBar { DivisorX omegabar; DivisorB Dbar; };    // ch3^{p^*D̄} / (ω̄·ch2^{p^*D̄})
struct MuPHBPD { DivisorB D; };                          // p^*H_B·ch2^{p^*D} / Θp^*H_B·ch1^{p^*D}
struct MuThetaMPHBPD { DivisorB D; };                    // (Θ + m p^*H_B)·ch2^{p^*D} / Θp^*H_B·ch1^{p^*D}
struct MuOmegaPD { DivisorX omega; DivisorB D; };      // ω·ch2^{p^*D} / ω²ch1^{p^*D}
} // namespace slope_kind

using SlopeKind = std::variant<slope_kind::MuOmegaB, slope_kind::NuOmegaB, slope_kind::MuF, slope_kind::MuThetaM,
                               slope_kind::MuStar, slope_kind::MuStarB, slope_kind::MuBar, slope_kind::MuPHBPD,
                               slope_kind::MuThetaMPHBPD, slope_kind::MuOmegaPD>;

// Tag name of a kind, e.g. "MU_STAR_B".
std::string kind_name(const SlopeKind& kind);

// Evaluates the slope; every numerator and denominator is an intersection
// number computed with ring multiplication.  Zero denominators give +∞.
SlopeValue slope(const BaseGeometry& g, const SlopeKind& kind, const ChernVector& v);

// m = m0² H_B² / (h + 2 m0).  (The geometry caches the same value.)
Rational compute_m(const BaseGeometry& g);

// For a one-dimensional numeric class (n = x = 0, S = 0): true iff η = 0.
// Throws DomainError otherwise.
bool is_fiber_numeric(const BaseGeometry& g, const ChernVector& v);

// Intersection number of a top-degree product: the point coefficient of v1·v2.
Rational intersect(const BaseGeometry& g, const ChernVector& v1, const ChernVector& v2);

} // namespace fmcalc
