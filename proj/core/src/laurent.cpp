#include "fmcalc/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace fmcalc {

namespace {

long clamp_trunc(long t) {
    return t <= LaurentSeries::kExact / 2 ? LaurentSeries::kExact : t;
}

} // namespace

LaurentSeries LaurentSeries::constant(const Rational& c) {
    return monomial(c, 0);
}

LaurentSeries LaurentSeries::monomial(const Rational& c, long exponent, long trunc) {
    return from_terms({{exponent, c}}, trunc);
}

LaurentSeries LaurentSeries::from_terms(const std::vector<std::pair<long, Rational>>& terms, long trunc) {
    LaurentSeries s;
    s.trunc_ = clamp_trunc(trunc);
    for (const auto& [e, c] : terms) s.t_[e] += c;
    s.normalize();
    return s;
}

void LaurentSeries::normalize() {
    for (auto it = t_.begin(); it != t_.end();) {
        if (it->second == 0 || it->first < trunc_)
            it = t_.erase(it);
        else
            ++it;
    }
}

std::vector<std::pair<long, Rational>> LaurentSeries::terms() const {
    return {t_.begin(), t_.end()};
}

Rational LaurentSeries::coeff(long exponent) const {
    auto it = t_.find(exponent);
    return it == t_.end() ? Rational(0) : it->second;
}

long LaurentSeries::top() const {
    if (!t_.empty()) return t_.begin()->first;
    return is_exact() ? kExact : trunc_ - 1;
}

std::optional<int> LaurentSeries::sign() const {
    if (!t_.empty()) return sgn(t_.begin()->second);
    if (is_exact()) return 0;
    return std::nullopt;
}

LaurentSeries LaurentSeries::truncated(long floor) const {
    LaurentSeries s = *this;
    s.trunc_ = std::max(s.trunc_, floor);
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::shifted(long k) const {
    LaurentSeries s;
    s.trunc_ = is_exact() ? kExact : trunc_ + k;
    for (const auto& [e, c] : t_) s.t_.emplace(e + k, c);
    return s;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
    trunc_ = std::max(trunc_, o.trunc_);
    for (const auto& [e, c] : o.t_) t_[e] += c;
    normalize();
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) {
    trunc_ = std::max(trunc_, o.trunc_);
    for (const auto& [e, c] : o.t_) t_[e] -= c;
    normalize();
    return *this;
}

LaurentSeries operator-(const LaurentSeries& s) {
    return Rational(-1) * s;
}

LaurentSeries operator*(const LaurentSeries& l, const LaurentSeries& r) {
    LaurentSeries out;
    if (l.is_exact_zero() || r.is_exact_zero()) return out;
    // Error terms: known(l)·err(r) + err(l)·known(r) + err(l)·err(r).
    long t = LaurentSeries::kExact;
    if (!r.is_exact()) t = std::max(t, l.top() + r.trunc_);
    if (!l.is_exact()) t = std::max(t, r.top() + l.trunc_);
    out.trunc_ = clamp_trunc(t);
    for (const auto& [e1, c1] : l.t_)
        for (const auto& [e2, c2] : r.t_) {
            if (e1 + e2 < out.trunc_) continue;
            out.t_[e1 + e2] += c1 * c2;
        }
    out.normalize();
    return out;
}

LaurentSeries operator*(const Rational& c, const LaurentSeries& s) {
    if (c == 0) return LaurentSeries::exact_zero(); // the unknown remainder is annihilated too
    LaurentSeries out = s;
    for (auto& [e, k] : out.t_) k *= c;
    return out;
}

std::string LaurentSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        os << to_string(abs(c));
        if (e != 0) os << "*v^" << e;
    }
    if (!is_exact()) {
        if (!first) os << " + ";
        os << "O(v^" << (trunc_ - 1) << ")";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

LaurentSeries substitute(const Poly2& p, const LaurentSeries& u) {
    LaurentSeries total;
    int du = p.degree_u();
    if (du < 0) return total;
    std::vector<LaurentSeries> powers{LaurentSeries::constant(1)};
    for (int i = 1; i <= du; ++i) powers.push_back(powers.back() * u);
    for (const auto& [e, c] : p.terms())
        total += (c * powers[static_cast<std::size_t>(e.first)]).shifted(e.second);
    return total;
}

} // namespace fmcalc
