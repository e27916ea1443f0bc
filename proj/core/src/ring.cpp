#include "fmcalc/ring.hpp"

#include "fmcalc/errors.hpp"

namespace fmcalc {

namespace {

void require_rank(std::size_t got, std::size_t want, const char* what) {
    if (got != want)
        throw DimensionError(std::string(what) + ": rank " + std::to_string(got) + " does not match " +
                             std::to_string(want));
}

void require_vector(const BaseGeometry& g, const ChernVector& v) {
    require_rank(v.S.rank(), g.rank(), "ChernVector.S");
    require_rank(v.eta.rank(), g.rank(), "ChernVector.eta");
}

} // namespace

// ---------------------------------------------------------------- DivisorB

DivisorB DivisorB::zero(std::size_t rank) {
    return DivisorB(std::vector<Rational>(rank));
}

DivisorB DivisorB::unit(std::size_t rank, std::size_t i) {
    DivisorB d = zero(rank);
    d.coords.at(i) = 1;
    return d;
}

bool DivisorB::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

DivisorB& DivisorB::operator+=(const DivisorB& o) {
    require_rank(o.rank(), rank(), "DivisorB addition");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

DivisorB& DivisorB::operator-=(const DivisorB& o) {
    require_rank(o.rank(), rank(), "DivisorB subtraction");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
}

DivisorB& DivisorB::operator*=(const Rational& c) {
    for (auto& x : coords) x *= c;
    return *this;
}

// ---------------------------------------------------------------- DivisorX

DivisorX operator+(const DivisorX& l, const DivisorX& r) {
    return DivisorX{Rational(l.theta + r.theta), l.base + r.base};
}

DivisorX operator-(const DivisorX& d) {
    return DivisorX{Rational(-d.theta), -d.base};
}

// ---------------------------------------------------------------- ChernVector

ChernVector ChernVector::zero(std::size_t rank) {
    return ChernVector{0, 0, DivisorB::zero(rank), DivisorB::zero(rank), 0, 0};
}

bool ChernVector::is_zero() const {
    return n == 0 && x == 0 && S.is_zero() && eta.is_zero() && a == 0 && s == 0;
}

ChernVector& ChernVector::operator+=(const ChernVector& o) {
    n += o.n;
    x += o.x;
    S += o.S;
    eta += o.eta;
    a += o.a;
    s += o.s;
    return *this;
}

ChernVector& ChernVector::operator-=(const ChernVector& o) {
    n -= o.n;
    x -= o.x;
    S -= o.S;
    eta -= o.eta;
    a -= o.a;
    s -= o.s;
    return *this;
}

ChernVector& ChernVector::operator*=(const Rational& c) {
    n *= c;
    x *= c;
    S *= c;
    eta *= c;
    a *= c;
    s *= c;
    return *this;
}

bool operator==(const ChernVector& l, const ChernVector& r) {
    return l.n == r.n && l.x == r.x && l.S == r.S && l.eta == r.eta && l.a == r.a && l.s == r.s;
}

// ---------------------------------------------------------------- BaseGeometry

BaseGeometry::BaseGeometry(std::vector<std::vector<Rational>> gram, std::vector<Rational> hb, Rational h,
                           Rational vprime, Rational m0)
    : gram_(std::move(gram)), hb_(std::move(hb)), h_(std::move(h)), vprime_(std::move(vprime)),
      m0_(std::move(m0)) {
    const std::size_t r = hb_.rank();
    if (r == 0) throw ConfigError("geometry.rank", "rank must be positive");
    if (gram_.size() != r) throw ConfigError("geometry.gram", "expected " + std::to_string(r) + " rows");
    for (std::size_t i = 0; i < r; ++i)
        if (gram_[i].size() != r)
            throw ConfigError("geometry.gram", "row " + std::to_string(i + 1) + " must have " +
                                                   std::to_string(r) + " entries");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (gram_[i][j] != gram_[j][i]) throw ConfigError("geometry.gram", "matrix is not symmetric");
    H2_ = pair(*this, hb_, hb_);
    if (H2_ <= 0) throw ConfigError("geometry.hb", "H_B^2 must be positive");
    if (vprime_ < 0) throw ConfigError("geometry.vprime", "must be non-negative");
    if (m0_ <= vprime_) throw ConfigError("geometry.m0", "must exceed vprime");
    Rational denom = h_ + 2 * m0_;
    if (denom <= 0) throw ConfigError("geometry.m0", "h + 2*m0 must be positive");
    m_ = m0_ * m0_ * H2_ / denom;
}

DivisorB BaseGeometry::K() const {
    return h_ * hb_;
}

bool operator==(const BaseGeometry& l, const BaseGeometry& r) {
    return l.gram_ == r.gram_ && l.hb_ == r.hb_ && l.h_ == r.h_ && l.vprime_ == r.vprime_ && l.m0_ == r.m0_;
}

BaseGeometry unit_geometry(const Rational& h, const Rational& vprime, const Rational& m0) {
    return BaseGeometry({{Rational(1)}}, {Rational(1)}, h, vprime, m0);
}

// ---------------------------------------------------------------- products

Rational pair(const BaseGeometry& g, const DivisorB& d1, const DivisorB& d2) {
    require_rank(d1.rank(), g.rank(), "pair");
    require_rank(d2.rank(), g.rank(), "pair");
    Rational total = 0;
    const auto& G = g.gram();
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (d1.coords[i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < g.rank(); ++j) row += G[i][j] * d2.coords[j];
        total += d1.coords[i] * row;
    }
    return total;
}

Rational dot_H(const BaseGeometry& g, const DivisorB& d) {
    return pair(g, g.hb(), d);
}

ChernVector mul(const BaseGeometry& g, const ChernVector& v1, const ChernVector& v2) {
    require_vector(g, v1);
    require_vector(g, v2);
    ChernVector r = ChernVector::zero(g.rank());

    r.n = v1.n * v2.n;

    r.x = v1.n * v2.x + v2.n * v1.x;
    r.S = v1.n * v2.S + v2.n * v1.S;

    // Degree 1 × degree 1: Θ² = Θ·p^*K_B, Θ·p^*S, p^*S1·p^*S2 = (S1·S2) f.
    r.eta = v1.n * v2.eta + v2.n * v1.eta + Rational(v1.x * v2.x * g.h()) * g.hb() + v1.x * v2.S + v2.x * v1.S;
    r.a = v1.n * v2.a + v2.n * v1.a + pair(g, v1.S, v2.S);

    // Degree 1 × degree 2: Θ·Θp^*η = K_B·η, p^*S·Θp^*η = S·η, Θ·f = 1, p^*S·f = 0.
    auto d1d2 = [&g](const ChernVector& p, const ChernVector& q) {
        return Rational(p.x * g.h() * dot_H(g, q.eta) + pair(g, p.S, q.eta) + p.x * q.a);
    };
    r.s = v1.n * v2.s + v2.n * v1.s + d1d2(v1, v2) + d1d2(v2, v1);
    return r;
}

ChernVector twist(const BaseGeometry& g, const ChernVector& v, const DivisorX& B) {
    ChernVector b = divisor_class(g, B);
    ChernVector b2 = mul(g, b, b);
    ChernVector b3 = mul(g, b2, b);
    ChernVector e = unit_class(g) - b + Rational(1, 2) * b2 - Rational(1, 6) * b3;
    return mul(g, e, v);
}

// ---------------------------------------------------------------- classes

ChernVector unit_class(const BaseGeometry& g) {
    ChernVector v = ChernVector::zero(g.rank());
    v.n = 1;
    return v;
}

ChernVector divisor_class(const BaseGeometry& g, const DivisorX& d) {
    require_rank(d.base.rank(), g.rank(), "DivisorX.base");
    ChernVector v = ChernVector::zero(g.rank());
    v.x = d.theta;
    v.S = d.base;
    return v;
}

ChernVector fiber_class(const BaseGeometry& g) {
    ChernVector v = ChernVector::zero(g.rank());
    v.a = 1;
    return v;
}

ChernVector point_class(const BaseGeometry& g) {
    ChernVector v = ChernVector::zero(g.rank());
    v.s = 1;
    return v;
}

ChernVector theta_pullback(const BaseGeometry& g, const DivisorB& d) {
    require_rank(d.rank(), g.rank(), "theta_pullback");
    ChernVector v = ChernVector::zero(g.rank());
    v.eta = d;
    return v;
}

ChernVector degree_part(const ChernVector& v, int k) {
    ChernVector r = ChernVector::zero(v.rank());
    switch (k) {
    case 0: r.n = v.n; break;
    case 1: r.x = v.x; r.S = v.S; break;
    case 2: r.eta = v.eta; r.a = v.a; break;
    case 3: r.s = v.s; break;
    default: break;
    }
    return r;
}

DivisorX half_anticanonical_field(const BaseGeometry& g) {
    return DivisorX{0, Rational(-g.h() / 2) * g.hb()};
}

DivisorX pullback_field(const DivisorB& d) {
    return DivisorX{0, d};
}

DivisorX polarization(const BaseGeometry& g, const Rational& u, const Rational& v) {
    return DivisorX{u, v * g.hb()};
}

DivisorB accessor_A2(const BaseGeometry& g, const ChernVector& v) {
    return v.S + Rational(v.n * g.h() / 2) * g.hb();
}

Rational accessor_A3(const BaseGeometry& g, const ChernVector& v) {
    const Rational& h = g.h();
    Rational K2 = h * h * g.H2();
    return v.s + h * dot_H(g, v.eta) / 2 + v.x * K2 / 8 - v.x * K2 / 24;
}

std::string to_string(const DivisorB& d) {
    std::string out = "[";
    for (std::size_t i = 0; i < d.coords.size(); ++i) {
        if (i) out += ", ";
        out += to_string(d.coords[i]);
    }
    return out + "]";
}

std::string to_string(const ChernVector& v) {
    return "(" + to_string(v.n) + ", " + to_string(v.x) + ", " + to_string(v.S) + ", " + to_string(v.eta) + ", " +
           to_string(v.a) + ", " + to_string(v.s) + ")";
}

} // namespace fmcalc
