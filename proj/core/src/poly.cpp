#include "fmcalc/poly.hpp"

#include "fmcalc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace fmcalc {

// ---------------------------------------------------------------- Poly1

Poly1::Poly1(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

void Poly1::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly1::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

Rational Poly1::eval(const Rational& t) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r *= t;
        r += *it;
    }
    return r;
}

namespace {

Interval imul(const Interval& a, const Interval& b) {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    Rational lo = p[0], hi = p[0];
    for (const auto& q : p) {
        if (q < lo) lo = q;
        if (q > hi) hi = q;
    }
    return {lo, hi};
}

} // namespace

Interval Poly1::eval(const Interval& t) const {
    Interval r{0, 0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = imul(r, t);
        r.lo += *it;
        r.hi += *it;
    }
    return r;
}

Poly1 Poly1::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return Poly1(std::move(d));
}

Poly1 operator+(const Poly1& l, const Poly1& r) {
    std::vector<Rational> c(std::max(l.c_.size(), r.c_.size()));
    for (std::size_t i = 0; i < l.c_.size(); ++i) c[i] += l.c_[i];
    for (std::size_t i = 0; i < r.c_.size(); ++i) c[i] += r.c_[i];
    return Poly1(std::move(c));
}

Poly1 operator-(const Poly1& l, const Poly1& r) {
    return l + Rational(-1) * r;
}

Poly1 operator*(const Poly1& l, const Poly1& r) {
    if (l.is_zero() || r.is_zero()) return Poly1();
    std::vector<Rational> c(l.c_.size() + r.c_.size() - 1);
    for (std::size_t i = 0; i < l.c_.size(); ++i)
        for (std::size_t j = 0; j < r.c_.size(); ++j) c[i + j] += l.c_[i] * r.c_[j];
    return Poly1(std::move(c));
}

Poly1 operator*(const Rational& k, const Poly1& p) {
    std::vector<Rational> c = p.c_;
    for (auto& x : c) x *= k;
    return Poly1(std::move(c));
}

std::pair<Poly1, Poly1> Poly1::divmod(const Poly1& num, const Poly1& den) {
    if (den.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = num.c_;
    const int dd = den.degree();
    std::vector<Rational> q(rem.size() > static_cast<std::size_t>(dd) ? rem.size() - dd : 0);
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        Rational f = rem[k] / den.leading();
        if (f == 0) continue;
        q[k - dd] = f;
        for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= f * den.c_[i];
    }
    return {Poly1(std::move(q)), Poly1(std::move(rem))};
}

Poly1 Poly1::gcd(const Poly1& a, const Poly1& b) {
    Poly1 x = a, y = b;
    while (!y.is_zero()) {
        Poly1 r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return Rational(1 / x.leading()) * x;
}

Rational root_bound(const Poly1& p) {
    if (p.degree() < 1) return 1;
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = abs(Rational(p.coeff(i) / p.leading()));
        if (r > m) m = r;
    }
    Rational bound = 1 + m;
    Rational b = 1;
    while (b <= bound) b *= 2;
    return b;
}

namespace {

// Sturm chain of the square-free part of p.
struct Sturm {
    std::vector<Poly1> chain;

    explicit Sturm(const Poly1& p) {
        if (p.is_zero()) throw DomainError("root isolation of the zero polynomial");
        Poly1 g = Poly1::gcd(p, p.derivative());
        Poly1 sf = g.degree() > 0 ? Poly1::divmod(p, g).first : p;
        chain.push_back(sf);
        chain.push_back(sf.derivative());
        while (!chain.back().is_zero()) {
            Poly1 r = Poly1::divmod(chain[chain.size() - 2], chain.back()).second;
            chain.push_back(Rational(-1) * r);
        }
        chain.pop_back();
    }

    const Poly1& squarefree() const { return chain.front(); }

    int variations(const Rational& t) const {
        int count = 0, last = 0;
        for (const auto& q : chain) {
            int s = q.sign_at(t);
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    // Distinct roots in (a, b].
    int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }
};

void isolate(const Sturm& st, const Rational& a, const Rational& b, int cnt, std::vector<Interval>& out) {
    if (cnt <= 0) return;
    if (cnt == 1) {
        if (st.squarefree().sign_at(b) == 0)
            out.push_back({b, b});
        else
            out.push_back({a, b});
        return;
    }
    Rational m = a + b;
    m /= 2;
    int left = st.count(a, m);
    isolate(st, a, m, left, out);
    isolate(st, m, b, cnt - left, out);
}

} // namespace

std::vector<Interval> isolate_roots(const Poly1& p, const Rational& lo, const Rational& hi) {
    Sturm st(p);
    std::vector<Interval> out;
    if (st.squarefree().degree() < 1 || hi <= lo) return out;
    isolate(st, lo, hi, st.count(lo, hi), out);
    return out;
}

Interval refine_root(const Poly1& p, Interval bracket, const Rational& precision) {
    if (bracket.exact()) return bracket;
    Sturm st(p);
    const Poly1& q = st.squarefree();
    if (q.sign_at(bracket.hi) == 0) return {bracket.hi, bracket.hi};
    while (bracket.width() > precision) {
        Rational m = bracket.mid();
        if (q.sign_at(m) == 0) return {m, m};
        if (st.count(bracket.lo, m) == 1)
            bracket.hi = m;
        else
            bracket.lo = m;
    }
    return bracket;
}

// ---------------------------------------------------------------- Poly2

Poly2 Poly2::constant(const Rational& c) {
    return monomial(c, 0, 0);
}

Poly2 Poly2::monomial(const Rational& c, int i, int j) {
    Poly2 p;
    p.add_term({i, j}, c);
    return p;
}

void Poly2::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) t_.erase(it);
}

Rational Poly2::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Rational(0) : it->second;
}

int Poly2::degree_u() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.first);
    return d;
}

int Poly2::degree_v() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.second);
    return d;
}

Rational Poly2::eval(const Rational& u, const Rational& v) const {
    Rational r = 0;
    for (const auto& [e, c] : t_) r += c * pow(u, static_cast<unsigned>(e.first)) * pow(v, static_cast<unsigned>(e.second));
    return r;
}

Poly1 Poly2::at_v(const Rational& v) const {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(degree_u(), -1) + 1));
    for (const auto& [e, k] : t_) c[static_cast<std::size_t>(e.first)] += k * pow(v, static_cast<unsigned>(e.second));
    return Poly1(std::move(c));
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    for (const auto& [e, c] : o.t_) add_term(e, Rational(-c));
    return *this;
}

Poly2 operator-(const Poly2& p) {
    return Rational(-1) * p;
}

Poly2 operator*(const Poly2& l, const Poly2& r) {
    Poly2 out;
    for (const auto& [e1, c1] : l.t_)
        for (const auto& [e2, c2] : r.t_) out.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
    return out;
}

Poly2 operator*(const Rational& k, const Poly2& p) {
    Poly2 out;
    if (k == 0) return out;
    for (const auto& [e, c] : p.t_) out.t_.emplace(e, c * k);
    return out;
}

std::pair<Poly2, Poly2> Poly2::divide(const Poly2& f, const Poly2& d) {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    const auto& [ld, lc] = *d.t_.rbegin(); // lex-leading term, u before v
    Poly2 p = f, q, r;
    while (!p.is_zero()) {
        auto [lp, cp] = *p.t_.rbegin();
        if (lp.first >= ld.first && lp.second >= ld.second) {
            Poly2 t = monomial(Rational(cp / lc), lp.first - ld.first, lp.second - ld.second);
            q += t;
            p -= t * d;
        } else {
            Poly2 t = monomial(cp, lp.first, lp.second);
            r += t;
            p -= t;
        }
    }
    return {q, r};
}

std::string Poly2::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        Rational m = abs(c);
        bool unit = (m == 1) && (e.first > 0 || e.second > 0);
        if (!unit) os << to_string(m);
        auto var = [&](const char* name, int k) {
            if (k == 0) return;
            if (!unit) os << "*";
            unit = false;
            os << name;
            if (k > 1) os << "^" << k;
        };
        var("u", e.first);
        var("v", e.second);
    }
    return os.str();
}

} // namespace fmcalc
