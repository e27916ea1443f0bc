#include "helpers.hpp"
#include "oracle.hpp"

#include "fmcalc/errors.hpp"
#include "fmcalc/ring.hpp"

using namespace fmcalc;
using namespace testing;

namespace {

BaseGeometry hyperbolic() { return BaseGeometry({{0, 1}, {1, 0}}, {1, 1}, 0, 0, 1); }

} // namespace

TEST_CASE("pair on small lattices") {
    CHECK(pair(unit_geometry(0), e1(), e1()) == 1);
    BaseGeometry scaled({{2}}, {1}, 0, 0, 1);
    CHECK(pair(scaled, e1(), e1()) == 2);
    CHECK(pair(hyperbolic(), DivisorB::unit(2, 0), DivisorB::unit(2, 1)) == 1);
    CHECK(pair(hyperbolic(), DivisorB::unit(2, 0), DivisorB::unit(2, 0)) == 0);
    CHECK_THROWS_AS(pair(hyperbolic(), e1(), DivisorB::unit(2, 0)), DimensionError);
}

TEST_CASE("geometry invariants are validated") {
    auto field_of = [](auto&& make) {
        try {
            make();
        } catch (const ConfigError& e) {
            return e.field();
        }
        return std::string("none");
    };
    CHECK(field_of([] { BaseGeometry({{1, 2}, {0, 1}}, {1, 0}, 0, 0, 1); }) == "geometry.gram");
    CHECK(field_of([] { BaseGeometry({{0}}, {1}, 0, 0, 1); }) == "geometry.hb");
    CHECK(field_of([] { BaseGeometry({{1}}, {1}, -2, 0, 1); }) == "geometry.m0");
    CHECK(field_of([] { BaseGeometry({{1}}, {1}, 0, 2, 1); }) == "geometry.m0");
    CHECK_NOTHROW(BaseGeometry({{1}}, {1}, 0, 0, 1));
}

TEST_CASE("products of basic classes") {
    BaseGeometry g = unit_geometry(-1);
    ChernVector theta = divisor_class(g, DivisorX{1, DivisorB::zero(1)});
    ChernVector tt = mul(g, theta, theta);
    CHECK(tt == V(0, 0, 0, -1, 0, 0));

    ChernVector H = divisor_class(g, DivisorX{0, e1()});
    CHECK(mul(g, H, H) == V(0, 0, 0, 0, 1, 0));
    CHECK(mul(g, theta, fiber_class(g)) == point_class(g));
    CHECK(mul(g, theta, theta_pullback(g, e1())) == V(0, 0, 0, 0, 0, -1));
}

TEST_CASE("ring axioms on random vectors") {
    oracle::Gen gen(11);
    for (int i = 0; i < 2000; ++i) {
        BaseGeometry g = gen.geometry(gen.rat(2, 2));
        ChernVector a = gen.vec(g.rank()), b = gen.vec(g.rank()), c = gen.vec(g.rank());
        Rational k = gen.rat();
        REQUIRE(mul(g, a, b) == mul(g, b, a));
        REQUIRE(mul(g, mul(g, a, b), c) == mul(g, a, mul(g, b, c)));
        REQUIRE(mul(g, a + k * b, c) == mul(g, a, c) + k * mul(g, b, c));
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; q <= 3; ++q) {
                ChernVector prod = mul(g, degree_part(a, p), degree_part(b, q));
                for (int d = 0; d <= 3; ++d)
                    if (d != p + q) REQUIRE(degree_part(prod, d).is_zero());
            }
        REQUIRE(oracle::same(oracle::from(mul(g, a, b)), oracle::mul(oracle::from(g), oracle::from(a), oracle::from(b))));
    }
}

TEST_CASE("twist examples") {
    BaseGeometry g = unit_geometry(0);
    CHECK(twist(g, V(1, 0, 0, 0, 0, 0), pullback_field(e1())) == V(1, 0, -1, 0, ratio(1, 2), 0));
    ChernVector v = V(3, 1, 2, -1, 5, 7);
    CHECK(twist(g, v, DivisorX{0, DivisorB::zero(1)}) == v);

    BaseGeometry gm = unit_geometry(-1);
    CHECK(twist(gm, V(2, 0, 0, 0, 0, 0), half_anticanonical_field(gm)) == V(2, 0, -1, 0, ratio(1, 4), 0));
}

TEST_CASE("twist properties") {
    oracle::Gen gen(12);
    for (int i = 0; i < 1000; ++i) {
        BaseGeometry g = gen.geometry(gen.rat(2, 2));
        ChernVector v = gen.vec(g.rank());
        DivisorX B1{gen.rat(), gen.div(g.rank())};
        DivisorX B2 = pullback_field(gen.div(g.rank())), B3 = pullback_field(gen.div(g.rank()));

        REQUIRE(twist(g, twist(g, v, B1), -B1) == v);
        REQUIRE(twist(g, v, B2 + B3) == twist(g, twist(g, v, B2), B3));
        auto o = oracle::twist(oracle::from(g), oracle::from(v), oracle::q(B1.theta), oracle::from(B1.base));
        REQUIRE(oracle::same(oracle::from(twist(g, v, B1)), o));

        // Closed form of ch^B for B = −½p*K_B.
        const Rational& h = g.h();
        const DivisorB& H = g.hb();
        ChernVector tw = twist(g, v, half_anticanonical_field(g));
        ChernVector expect{v.n,
                           v.x,
                           v.S + (v.n * h / 2) * H,
                           v.eta + (v.x * h / 2) * H,
                           v.a + h / 2 * dot_H(g, v.S) + v.n * h * h * g.H2() / 8,
                           v.s + h / 2 * dot_H(g, v.eta) + v.x * h * h * g.H2() / 8};
        REQUIRE(tw == expect);
        REQUIRE(accessor_A2(g, v) == tw.S);
        REQUIRE(accessor_A3(g, v) == tw.s - v.x * h * h * g.H2() / 24);
    }
}

TEST_CASE("text forms") {
    CHECK(to_string(DivisorB({ratio(1, 2), Rational(-3)})) == "[1/2, -3]");
    CHECK(to_string(V(1, 0, ratio(-1, 3), 0, 2, ratio(5, 7))) == "(1, 0, [-1/3], [0], 2, 5/7)");
}
