#include "helpers.hpp"
#include "oracle.hpp"

#include "fmcalc/errors.hpp"
#include "fmcalc/fmt.hpp"

using namespace fmcalc;
using namespace testing;

TEST_CASE("phi examples") {
    BaseGeometry g = unit_geometry(-1);
    CHECK(phi(g, V(0, 0, 0, 0, 0, 1)) == V(0, 0, 0, 0, 1, 0));
    CHECK(phi(g, V(1, 0, 0, 0, 0, 0)) == V(0, -1, 0, ratio(1, 2), 0, ratio(-1, 6)));
    CHECK(phi(g, ChernVector::zero(1)).is_zero());
}

TEST_CASE("phi_hat examples") {
    for (Rational h : {Rational(-2), Rational(-1), Rational(0), ratio(1, 2)}) {
        BaseGeometry g = unit_geometry(h, 0, 3);
        CHECK(phi_hat(g, V(0, 0, 0, 0, 0, 1)) == V(0, 0, 0, 0, 1, 0));
        CHECK(phi_hat(g, phi(g, V(1, 0, 0, 0, 0, 0))) == V(-1, 0, 0, 0, 0, 0));
        CHECK(phi_hat(g, ChernVector::zero(1)).is_zero());
    }
}

TEST_CASE("transforms match the reference formulas and are involutive up to sign") {
    oracle::Gen gen(21);
    const Rational hs[] = {Rational(-2), Rational(-1), Rational(0), ratio(1, 2)};
    for (int i = 0; i < 4000; ++i) {
        BaseGeometry g = gen.geometry(hs[i % 4]);
        ChernVector v = gen.vec(g.rank()), w = gen.vec(g.rank());
        Rational k = gen.rat();
        auto og = oracle::from(g);
        REQUIRE(oracle::same(oracle::from(phi(g, v)), oracle::phi(og, oracle::from(v))));
        REQUIRE(oracle::same(oracle::from(phi_hat(g, v)), oracle::phi_hat(og, oracle::from(v))));
        REQUIRE(phi_hat(g, phi(g, v)) == -v);
        REQUIRE(phi(g, phi_hat(g, v)) == -v);
        REQUIRE(phi(g, v + k * w) == phi(g, v) + k * phi(g, w));
        REQUIRE(phi_hat(g, v + k * w) == phi_hat(g, v) + k * phi_hat(g, w));
    }
}

TEST_CASE("h = 0 transform is a pure row swap") {
    oracle::Gen gen(22);
    for (int i = 0; i < 500; ++i) {
        BaseGeometry g = gen.geometry(0);
        ChernVector v = gen.vec(g.rank());
        REQUIRE(phi(g, v) == ChernVector{v.x, -v.n, v.eta, -v.S, v.s, -v.a});
    }
}

TEST_CASE("fiber swap rule") {
    BaseGeometry g = unit_geometry(-1);
    CHECK(fiber_swap_rule(g, V(0, 0, 0, 0, 2, 3)) == V(0, 0, 0, 0, 3, -2));
    CHECK(fiber_swap_rule(g, V(0, 0, 0, 1, 1, 2)) == V(0, 0, 1, 0, 2, -1));
    CHECK_THROWS_AS(fiber_swap_rule(g, V(1, 0, 0, 0, 0, 0)), DomainError);
    CHECK_THROWS_AS(fiber_swap_rule(g, V(0, 1, 0, 0, 0, 0)), DomainError);

    oracle::Gen gen(23);
    for (int i = 0; i < 2000; ++i) {
        BaseGeometry gg = gen.geometry(gen.rat(2, 2));
        ChernVector v = gen.vec(gg.rank());
        v.n = 0;
        v.x = 0;
        DivisorB D = gen.div(gg.rank());
        DivisorB Dbar = D - (gg.h() / 2) * gg.hb();
        REQUIRE(fiber_swap_rule(gg, twist(gg, v, pullback_field(Dbar))) == twist(gg, phi(gg, v), pullback_field(D)));
    }
}
