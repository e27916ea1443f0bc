#pragma once

#include "fmcalc/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fmcalc {

// A class in A^1(B)_Q, written in the coordinates of the base lattice.
struct DivisorB {
    std::vector<Rational> coords;

    DivisorB() = default;
    explicit DivisorB(std::vector<Rational> c) : coords(std::move(c)) {}

    static DivisorB zero(std::size_t rank);
    static DivisorB unit(std::size_t rank, std::size_t i);

    std::size_t rank() const { return coords.size(); }
    bool is_zero() const;

    DivisorB& operator+=(const DivisorB& o);
    DivisorB& operator-=(const DivisorB& o);
    DivisorB& operator*=(const Rational& c);

    friend DivisorB operator+(DivisorB l, const DivisorB& r) { return l += r; }
    friend DivisorB operator-(DivisorB l, const DivisorB& r) { return l -= r; }
    friend DivisorB operator-(DivisorB d) { return d *= Rational(-1); }
    friend DivisorB operator*(const Rational& c, DivisorB d) { return d *= c; }
    friend bool operator==(const DivisorB& l, const DivisorB& r) { return l.coords == r.coords; }
};

// A divisor class theta*Θ + p^*(base) on X.  Used for B-fields and polarizations.
struct DivisorX {
    Rational theta;
    DivisorB base;

    friend DivisorX operator+(const DivisorX& l, const DivisorX& r);
    friend DivisorX operator-(const DivisorX& d);
    friend bool operator==(const DivisorX& l, const DivisorX& r) {
        return l.theta == r.theta && l.base == r.base;
    }
};

// A cohomology class of X in matrix notation:
//   ch0 = n,  ch1 = xΘ + p^*S,  ch2 = Θp^*η + a·f,  ch3 = s·[point].
struct ChernVector {
    Rational n;
    Rational x;
    DivisorB S;
    DivisorB eta;
    Rational a;
    Rational s;

    static ChernVector zero(std::size_t rank);

    std::size_t rank() const { return S.rank(); }
    bool is_zero() const;

    ChernVector& operator+=(const ChernVector& o);
    ChernVector& operator-=(const ChernVector& o);
    ChernVector& operator*=(const Rational& c);

    friend ChernVector operator+(ChernVector l, const ChernVector& r) { return l += r; }
    friend ChernVector operator-(ChernVector l, const ChernVector& r) { return l -= r; }
    friend ChernVector operator-(ChernVector v) { return v *= Rational(-1); }
    friend ChernVector operator*(const Rational& c, ChernVector v) { return v *= c; }
    friend bool operator==(const ChernVector& l, const ChernVector& r);
};

// Numerical data of the base surface plus the fibration constants.
//
// The intersection pairing on A^1(B)_Q is an arbitrary symmetric rational
// matrix; K_B is numerically h·H_B.  Construction validates the invariants
// and throws ConfigError naming the offending "geometry.*" field.
class BaseGeometry {
public:
    BaseGeometry(std::vector<std::vector<Rational>> gram, std::vector<Rational> hb, Rational h,
                 Rational vprime, Rational m0);

    std::size_t rank() const { return hb_.rank(); }
    const std::vector<std::vector<Rational>>& gram() const { return gram_; }
    const DivisorB& hb() const { return hb_; }
    const Rational& h() const { return h_; }
    const Rational& vprime() const { return vprime_; }
    const Rational& m0() const { return m0_; }

    // H_B^2 > 0.
    const Rational& H2() const { return H2_; }
    // The constant m = m0^2 H_B^2 / (h + 2 m0) used by the Θ + m·p^*H_B slopes.
    const Rational& m() const { return m_; }

    // K_B = h·H_B as a base divisor.
    DivisorB K() const;

    friend bool operator==(const BaseGeometry& l, const BaseGeometry& r);

private:
    std::vector<std::vector<Rational>> gram_;
    DivisorB hb_;
    Rational h_;
    Rational vprime_;
    Rational m0_;
    Rational H2_;
    Rational m_;
};

// Rank-1 unit lattice: gram [1], H_B = e1.
BaseGeometry unit_geometry(const Rational& h, const Rational& vprime = 0, const Rational& m0 = 1);

// d1ᵀ·gram·d2.  Throws DimensionError on rank mismatch.
Rational pair(const BaseGeometry& g, const DivisorB& d1, const DivisorB& d2);

// H_B·D.
Rational dot_H(const BaseGeometry& g, const DivisorB& d);

// Graded product in H^*(X), truncated above degree 3.
ChernVector mul(const BaseGeometry& g, const ChernVector& v1, const ChernVector& v2);

// ch^B = e^{-B}·ch = (1 - B + B²/2 - B³/6)·ch.
ChernVector twist(const BaseGeometry& g, const ChernVector& v, const DivisorX& B);

// Basic classes.
ChernVector unit_class(const BaseGeometry& g);                       // 1
ChernVector divisor_class(const BaseGeometry& g, const DivisorX& d);  // degree 1
ChernVector fiber_class(const BaseGeometry& g);                       // f
ChernVector point_class(const BaseGeometry& g);                       // [point]
ChernVector theta_pullback(const BaseGeometry& g, const DivisorB& d); // Θ·p^*d

// Graded pieces: keep only the degree-k part.
ChernVector degree_part(const ChernVector& v, int k);

// The B-field −½ p^*K_B.
DivisorX half_anticanonical_field(const BaseGeometry& g);

// The pullback field p^*D.
DivisorX pullback_field(const DivisorB& d);

// ω = uΘ + v·p^*H_B.
DivisorX polarization(const BaseGeometry& g, const Rational& u, const Rational& v);

// Derived accessors of the matrix notation:
//   A2 = S + ½n·K_B  (the p^*-part of ch1^B for B = −½p^*K_B),
//   A3 = s + ½K_B·η + ⅛x·K_B² − (1/24)x·K_B².
DivisorB accessor_A2(const BaseGeometry& g, const ChernVector& v);
Rational accessor_A3(const BaseGeometry& g, const ChernVector& v);

// "[c1, c2, ...]"
std::string to_string(const DivisorB& d);
// "(n, x, [S], [eta], a, s)"
std::string to_string(const ChernVector& v);

} // namespace fmcalc
