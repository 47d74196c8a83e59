#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ci2/ext.hpp"
#include "ci2/fp.hpp"
#include "ci2/linalg.hpp"
#include "ci2/mpoly.hpp"
#include "ci2/ratfunc.hpp"
#include "ci2/rational.hpp"
#include "ci2/rng.hpp"
#include "ci2/upoly.hpp"

using namespace ci2;

TEST_CASE("rationals are an exact field") {
    Rat a(1, 3), b(2, 5);
    CHECK((a * b).to_string() == "2/15");
    CHECK((a + b) == Rat(11, 15));
    CHECK(a.inv() == Rat(3, 1));
    CHECK((a - a).is_zero());
    CHECK(Rat::characteristic({}) == 0);
    CHECK(!Rat::exact_div(a, Rat()).has_value());
}

TEST_CASE("prime field arithmetic") {
    Fp::Ctx c{101};
    Fp a(45, 101), b(77, 101);
    CHECK((a * a.inv()).is_one());
    CHECK((b - b).is_zero());
    CHECK(Fp::characteristic(c) == 101);
    CHECK((Fp() + a) == a);        // modulus-free zero unifies
    CHECK((Fp() * a).is_zero());
    CHECK_THROWS_AS(Fp(3, 101) + Fp(3, 7), DomainError);
    // Fermat
    Fp x(5, 7);
    Fp acc = Fp::one({7});
    for (int i = 0; i < 6; ++i) acc *= x;
    CHECK(acc.is_one());
}

TEST_CASE("univariate polynomials over Q") {
    UPoly<Rat>::Ctx c{{}, "t"};
    auto t = UPoly<Rat>::t(c);
    auto p = t * t - UPoly<Rat>::one(c);           // t^2 - 1
    auto q = t - UPoly<Rat>::one(c);               // t - 1
    auto g = UPoly<Rat>::gcd(p, q);
    CHECK(g == q.monic());
    auto div = UPoly<Rat>::exact_div(p, q);
    REQUIRE(div.has_value());
    CHECK(*div == t + UPoly<Rat>::one(c));
    CHECK(!UPoly<Rat>::exact_div(p, t).has_value());
    CHECK(p.eval(Rat(3, 1)) == Rat(8, 1));
    CHECK(p.valuation_at(Rat(1, 1)) == 1);
    CHECK((p * p).valuation_at(Rat(1, 1)) == 2);
    CHECK(p.taylor_shift(Rat(1, 1)).coeff(0).is_zero());  // p(t+1) has root 0
}

TEST_CASE("rational functions reduce") {
    UPoly<Rat>::Ctx c{{}, "t"};
    auto t = UPoly<Rat>::t(c);
    RatFunc<Rat> f(t * t - UPoly<Rat>::one(c), t - UPoly<Rat>::one(c));
    CHECK(f.is_polynomial());
    CHECK(f.num() == t + UPoly<Rat>::one(c));
    auto g = RatFunc<Rat>::one(c) + RatFunc<Rat>::t(c);
    CHECK((g * g.inv()).is_one());
}

TEST_CASE("sparse multivariate ring with exact division") {
    MPoly<Rat>::Ctx c{3, {"a", "b", "c"}, {}};
    auto a = MPoly<Rat>::var(0, c), b = MPoly<Rat>::var(1, c);
    auto p = (a + b) * (a - b);
    auto q = MPoly<Rat>::exact_div(p, a + b);
    REQUIRE(q.has_value());
    CHECK(*q == a - b);
    CHECK(!MPoly<Rat>::exact_div(p, a).has_value());
    CHECK(p.total_degree() == 2);
}

TEST_CASE("quotient extension field and zero-divisor splitting") {
    UPoly<Rat>::Ctx pc{{}, "u"};
    auto u = UPoly<Rat>::t(pc);
    auto two = UPoly<Rat>::from_int(2, pc);
    // Q[u]/(u^2-2): a field
    auto ctx = Ext<Rat>::make_ctx(u * u - two);
    auto s = Ext<Rat>::generator(ctx);
    CHECK((s * s) == Ext<Rat>::from_int(2, ctx));
    CHECK((s * s.inv()).is_one());
    // Q[u]/(u^2-1) splits when inverting u-1
    auto ctx2 = Ext<Rat>::make_ctx(u * u - UPoly<Rat>::one(pc));
    auto z = Ext<Rat>::generator(ctx2) - Ext<Rat>::one(ctx2);
    CHECK_THROWS_AS(z.inv(), ExtSplit<Rat>);
}

TEST_CASE("exact linear algebra over Q") {
    Mat<Rat> m(3, 3, {});
    long vals[3][3] = {{2, 1, 1}, {1, 3, 2}, {1, 0, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = Rat(vals[i][j], 1);
    CHECK(det_bareiss(m) == Rat(-1, 1));
    CHECK(rank_of(m) == 3);
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK((m * *inv) == Mat<Rat>::identity(3, {}));

    Mat<Rat> sing(2, 3, {});
    sing(0, 0) = Rat(1, 1); sing(0, 1) = Rat(2, 1); sing(0, 2) = Rat(3, 1);
    sing(1, 0) = Rat(2, 1); sing(1, 1) = Rat(4, 1); sing(1, 2) = Rat(6, 1);
    CHECK(rank_of(sing) == 1);
    auto ker = kernel_basis(sing);
    CHECK(ker.rows() == 2);
    for (int r = 0; r < ker.rows(); ++r) {
        Rat acc;
        for (int j = 0; j < 3; ++j) acc += sing(0, j) * ker(r, j);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("bareiss over an integral domain stays fraction-free") {
    UPoly<Rat>::Ctx c{{}, "t"};
    auto t = UPoly<Rat>::t(c);
    Mat<UPoly<Rat>> m(2, 2, c);
    m(0, 0) = t; m(0, 1) = UPoly<Rat>::one(c);
    m(1, 0) = UPoly<Rat>::one(c); m(1, 1) = t;
    CHECK(det_bareiss(m) == t * t - UPoly<Rat>::one(c));
}

TEST_CASE("seeded rng is reproducible per trial") {
    auto a = Rng::for_trial(7, 3), b = Rng::for_trial(7, 3), c = Rng::for_trial(7, 4);
    long x = a.uniform(-1000, 1000);
    CHECK(x == b.uniform(-1000, 1000));
    (void)c;
}
