#include "helpers.hpp"
#include "oracle.hpp"

#include "fmcalc/charges.hpp"
#include "fmcalc/errors.hpp"

using namespace fmcalc;
using namespace testing;

TEST_CASE("reduced charge examples") {
    BaseGeometry g = unit_geometry(-1);
    CHECK(reduced_charge(g, V(0, 1, 0, 0, 0, 0), 1, 3) == ChargeValue{2, 0});
    CHECK(reduced_charge(g, V(0, 0, 0, 0, 1, 0), ratio(2, 7), 5) == ChargeValue{0, ratio(2, 7)});
    CHECK(reduced_charge(g, ChernVector::zero(1), 1, 1) == ChargeValue{0, 0});
    CHECK_THROWS_AS(reduced_charge(g, V(1, 0, 0, 0, 0, 0), 0, 1), DomainError);
}

TEST_CASE("full charge examples") {
    BaseGeometry g = unit_geometry(-1);
    DivisorX zero{0, DivisorB::zero(1)};
    DivisorX w = polarization(g, 2, 5);
    CHECK(full_charge(g, V(0, 0, 0, 0, 0, 1), w, zero) == ChargeValue{-1, 0});

    DivisorB D = e1(ratio(3, 2));
    Rational u = ratio(1, 3), v = 4;
    CHECK(full_charge(g, V(0, 0, 0, 0, 2, 5), polarization(g, u, v), pullback_field(D)) == ChargeValue{-5, u * 2});

    Rational h = g.h(), eta = 3, at = 2, st = 7;
    ChargeValue z = full_charge(g, V(0, 0, 0, eta, at, st), polarization(g, u, v), pullback_field(D));
    CHECK(z.re == -(st - D.coords[0] * eta));
    CHECK(z.im == h * u * eta + u * at + v * eta);
}

TEST_CASE("charges agree with the reference formulas") {
    oracle::Gen gen(41);
    for (int i = 0; i < 2000; ++i) {
        BaseGeometry g = gen.geometry(gen.rat(2, 2));
        auto og = oracle::from(g);
        ChernVector v = gen.vec(g.rank());
        Rational u = gen.positive(), w = gen.positive();
        ChargeValue z = reduced_charge(g, v, u, w);
        REQUIRE(z == reduced_charge_ring(g, v, u, w));
        REQUIRE(z == reduced_charge_poly(g, v).eval(u, w));
        auto o = oracle::reduced(og, oracle::from(v), oracle::q(u), oracle::q(w));
        REQUIRE(oracle::q(z.re) == o.re);
        REQUIRE(oracle::q(z.im) == o.im);

        DivisorX B{gen.rat(), gen.div(g.rank())};
        DivisorX om = polarization(g, u, w);
        ChargeValue f = full_charge(g, v, om, B);
        auto of = oracle::full(og, oracle::from(v), oracle::q(u), oracle::from(om.base), oracle::q(B.theta),
                               oracle::from(B.base));
        REQUIRE(oracle::q(f.re) == of.re);
        REQUIRE(oracle::q(f.im) == of.im);

        // The closed form for B = p*D on fiber-degree-zero classes.
        ChernVector F = v;
        F.n = 0;
        F.x = 0;
        DivisorB D = gen.div(g.rank());
        REQUIRE(full_charge_poly(g, F, D).eval(u, w) == full_charge(g, F, om, pullback_field(D)));
    }
}

TEST_CASE("transform charge of one-dimensional classes") {
    BaseGeometry g0 = unit_geometry(0);
    ChernVector T = V(0, 0, 0, 1, 0, 1);
    DivisorB zero = DivisorB::zero(1);
    CHECK(onedim_transform_charge(g0, T, 1, 1, ratio(1, 2), 2, zero) == ChargeValue{1, ratio(1, 2)});
    CHECK(onedim_transform_charge_on_curve(g0, T, 1, 1, ratio(1, 2), zero) == ChargeValue{1, ratio(1, 2)});
    CHECK(onedim_transform_charge(g0, V(0, 0, 0, 0, 1, 0), 2, 3, 5, 7, e1(4)) == ChargeValue{1, 0});
    CHECK(onedim_transform_charge(g0, ChernVector::zero(1), 2, 3, 5, 7, e1(4)) == ChargeValue{0, 0});
    CHECK_THROWS_AS(onedim_transform_charge(g0, V(0, 0, 1, 0, 0, 0), 1, 1, 1, 1, zero), DomainError);

    // On the curve ½u(hu+2v) = h + z/y the two closed forms agree.  For a
    // rational u the matching v = (q − ½hu²)/u is rational.
    oracle::Gen gen(42);
    for (int i = 0; i < 1000; ++i) {
        Rational h = gen.rat(2, 2);
        BaseGeometry g = gen.geometry(h);
        Rational y = gen.positive(), z = gen.positive();
        if (h + z / y <= 0) z = y * (1 - h);
        Rational q = h + z / y;
        Rational u = gen.positive(3, 7);
        Rational v = (q - h * u * u / 2) / u;
        if (v <= 0) continue;
        ChernVector E = gen.vec(g.rank());
        E.n = 0;
        E.x = 0;
        E.S = DivisorB::zero(g.rank());
        DivisorB Dbar = gen.div(g.rank());
        REQUIRE(onedim_transform_charge(g, E, y, z, u, v, Dbar) ==
                onedim_transform_charge_on_curve(g, E, y, z, u, Dbar));
        REQUIRE(onedim_transform_charge_poly(g, E, Dbar).eval(u, v) == onedim_transform_charge(g, E, y, z, u, v, Dbar));
    }
}
