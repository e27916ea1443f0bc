#include "fmcalc/rational.hpp"

#include "fmcalc/errors.hpp"

#include <cctype>

namespace fmcalc {

namespace {

bool is_integer_text(std::string_view t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

std::string_view trim(std::string_view t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    return t;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view t = trim(text);
    auto slash = t.find('/');
    std::string_view num = slash == std::string_view::npos ? t : t.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : t.substr(slash + 1);
    if (!is_integer_text(num, true) || !is_integer_text(den, false))
        throw ParseError(0, "not a rational number: '" + std::string(t) + "'");
    std::string n(num.front() == '+' ? num.substr(1) : num);
    mpz_class zn(n, 10), zd(std::string(den), 10);
    if (zd == 0) throw ParseError(0, "zero denominator in '" + std::string(t) + "'");
    Rational q(zn, zd);
    q.canonicalize();
    return q;
}

Rational ratio(long num, long den) {
    if (den == 0) throw DomainError("ratio: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str(10);
}

int sign(const Rational& q) {
    return sgn(q);
}

Rational abs(const Rational& q) {
    return Rational(::abs(q));
}

Rational pow2(long k) {
    mpz_class p = 1;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
    return k < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

Rational pow(const Rational& q, unsigned k) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= q;
    return r;
}

double to_double(const Rational& q) {
    return q.get_d();
}

Rational Interval::mid() const {
    Rational m = lo + hi;
    m /= 2;
    return m;
}

Rational Interval::width() const {
    return Rational(hi - lo);
}

std::string to_string(const Interval& iv) {
    if (iv.exact()) return to_string(iv.lo);
    return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
}

} // namespace fmcalc
