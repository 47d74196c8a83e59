#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ci2/euclid.hpp"
#include "ci2/mpoly.hpp"
#include "oracles.hpp"

using namespace ci2;

namespace {

BinaryForm<Rat> bf(int deg, std::initializer_list<long> cs) {
    BinaryForm<Rat> f(deg, {});
    int j = 0;
    for (long c : cs) f.coeff(j++) = Rat(c, 1);
    return f;
}

AnchorList<Rat> anchors_q(std::initializer_list<std::pair<long, long>> ps) {
    std::vector<std::pair<Rat, Rat>> v;
    for (auto [l, m] : ps) v.push_back({Rat(l, 1), Rat(m, 1)});
    return AnchorList<Rat>(v);
}

} // namespace

TEST_CASE("divide_anchored: worked examples against the linear-solve oracle") {
    // A = X1^2, B = X0, anchor (1,0): Q = 0, R = 1
    {
        auto A = bf(2, {0, 0, 1}), B = bf(1, {1, 0});
        auto [q, r] = divide_anchored(A, B, Rat(1, 1), Rat());
        CHECK(q.is_zero());
        CHECK(r == bf(0, {1}));
    }
    // A = X0^2, B = X0+X1, anchor (1,0): Q = X0-X1, R = 1
    {
        auto A = bf(2, {1, 0, 0}), B = bf(1, {1, 1});
        auto [q, r] = divide_anchored(A, B, Rat(1, 1), Rat());
        auto [qo, ro] = oracles::anchored_division_oracle(A, B, Rat(1, 1), Rat());
        CHECK(q == qo);
        CHECK(r == ro);
        CHECK(q == bf(1, {1, -1}));
        CHECK(r == bf(0, {1}));
    }
    // A = X0^3, B = X0^2+X1^2, anchor (1,0): Q = X0, R = -X0
    {
        auto A = bf(3, {1, 0, 0, 0}), B = bf(2, {1, 0, 1});
        auto [q, r] = divide_anchored(A, B, Rat(1, 1), Rat());
        CHECK(q == bf(1, {1, 0}));
        CHECK(r == bf(1, {-1, 0}));
        auto [qo, ro] = oracles::anchored_division_oracle(A, B, Rat(1, 1), Rat());
        CHECK(q == qo);
        CHECK(r == ro);
    }
    // invalid anchor
    {
        auto A = bf(2, {0, 0, 1}), B = bf(1, {0, 1});  // B = X1, B(1,0) = 0
        CHECK_THROWS_AS(divide_anchored(A, B, Rat(1, 1), Rat()), AnchorError);
    }
}

TEST_CASE("divide_anchored matches the oracle on random input over Q and F_101") {
    Rng rng(11);
    Fp::Ctx fp{101};
    for (int trial = 0; trial < 80; ++trial) {
        int b = static_cast<int>(rng.uniform(1, 4));
        int a = static_cast<int>(rng.uniform(b, 7));
        auto B = random_nonzero_form<Rat>(b, {}, rng);
        auto A = random_form<Rat>(a, {}, rng);
        Rat l(rng.uniform(-3, 3), 1), m(rng.uniform(-3, 3), 1);
        if (l.is_zero() && m.is_zero()) l = Rat(1, 1);
        if (B.eval(l, m).is_zero()) continue;
        auto [q, r] = divide_anchored(A, B, l, m);
        auto [qo, ro] = oracles::anchored_division_oracle(A, B, l, m);
        CHECK(q == qo);
        CHECK(r == ro);

        auto Bp = random_nonzero_form<Fp>(b, fp, rng);
        auto Ap = random_form<Fp>(a, fp, rng);
        Fp lp(rng.uniform(0, 100), 101), mp(rng.uniform(0, 100), 101);
        if (lp.is_zero() && mp.is_zero()) lp = Fp(1, 101);
        if (Bp.eval(lp, mp).is_zero()) continue;
        auto [qp, rp] = divide_anchored(Ap, Bp, lp, mp);
        auto [qpo, rpo] = oracles::anchored_division_oracle(Ap, Bp, lp, mp);
        CHECK(qp == qpo);
        CHECK(rp == rpo);
    }
}

TEST_CASE("remainder sequence: (2,3) worked example") {
    // F = X0^2+X1^2, G = X0^3, anchors all (1,0): R_0 = -X0, R_1 = 1
    PencilPoint<Rat> x(bf(2, {1, 0, 1}), bf(3, {1, 0, 0, 0}));
    auto a = AnchorList<Rat>::constant(Rat(1, 1), Rat(), 2);
    auto seq = remainder_sequence(x, a);
    CHECK(seq.R[0] == bf(1, {-1, 0}));
    CHECK(seq.R[1] == bf(0, {1}));
    CHECK(seq.verify(x));
    auto oracle = oracles::sequence_oracle(x, a);
    CHECK(seq.R[0] == oracle[0]);
    CHECK(seq.R[1] == oracle[1]);
}

TEST_CASE("remainder sequence: W_1 example truncates") {
    // F = X0(X0+X1), G = X0X1(X0+2X1), anchors (1,0),(1,1): R_0 = X0, R_1 = 0
    auto f = bf(1, {1, 0}) * bf(1, {1, 1});
    auto g = bf(1, {1, 0}) * bf(1, {0, 1}) * bf(1, {1, 2});
    PencilPoint<Rat> x(f, g);
    auto a = anchors_q({{1, 0}, {1, 1}});
    auto seq = remainder_sequence(x, a);
    CHECK(seq.R[0] == bf(1, {1, 0}));
    CHECK(seq.R[1].is_zero());
    CHECK(seq.truncation == 1);
    CHECK(seq.verify(x));
    CHECK(stratum_index(x) == 1);
}

TEST_CASE("exactness on random pencils, all configured degree pairs") {
    Rng rng(5);
    Fp::Ctx fp{101};
    const std::pair<int, int> degs[] = {{2, 3}, {3, 5}, {4, 7}, {5, 6}};
    for (auto [d1, d2] : degs) {
        for (int trial = 0; trial < 25; ++trial) {
            auto x = random_pencil<Rat>(d1, d2, {}, rng);
            auto a = random_valid_anchors(x, rng);
            auto seq = remainder_sequence(x, a);
            CHECK(seq.verify(x));
            auto oracle = oracles::sequence_oracle(x, a);
            for (int i = 0; i <= d1 - 1; ++i) CHECK(seq.R[i] == oracle[i]);

            auto y = random_pencil<Fp>(d1, d2, fp, rng);
            auto ay = random_valid_anchors(y, rng);
            auto sy = remainder_sequence(y, ay);
            CHECK(sy.verify(y));
        }
    }
}

TEST_CASE("scaling laws of the universal grading") {
    // R_i(cF, G) = c^(d2-d1+1+i) R_i(F, G) and R_i(F, c'G) = c'^(1+i) R_i(F, G)
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        int d1 = static_cast<int>(rng.uniform(2, 4));
        int d2 = static_cast<int>(rng.uniform(d1 + 1, 6));
        auto x = random_coprime_pencil<Rat>(d1, d2, {}, rng);
        auto a = random_valid_anchors(x, rng);
        auto seq = remainder_sequence(x, a);
        Rat c = random_nonzero<Rat>({}, rng), cp = random_nonzero<Rat>({}, rng);
        auto seq_cf = remainder_sequence(PencilPoint<Rat>(x.F() * c, x.G()), a);
        auto seq_cg = remainder_sequence(PencilPoint<Rat>(x.F(), x.G() * cp), a);
        for (int i = 0; i <= d1 - 1; ++i) {
            Rat fs = Rat(1, 1), gs = Rat(1, 1);
            for (int k = 0; k < d2 - d1 + 1 + i; ++k) fs *= c;
            for (int k = 0; k < 1 + i; ++k) gs *= cp;
            CHECK(seq_cf.R[i] == seq.R[i] * fs);
            CHECK(seq_cg.R[i] == seq.R[i] * gs);
        }
    }
}

TEST_CASE("choose_anchors: greedy guarantee and tiny-field failure") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int d1 = static_cast<int>(rng.uniform(2, 5));
        int d2 = static_cast<int>(rng.uniform(d1 + 1, 7));
        int s = static_cast<int>(rng.uniform(0, d1 - 1));
        auto x = random_pencil_in_stratum<Rat>(d1, d2, s, {}, rng);
        auto a = choose_anchors(x);
        auto seq = remainder_sequence(x, a);
        int gamma = gcd_degree(x.F(), x.G());
        for (int i = 0; i < d1 - gamma; ++i) CHECK(!seq.R[i].is_zero());
        for (int i = d1 - gamma; i <= d1 - 1; ++i) CHECK(seq.R[i].is_zero());
    }
    // d1 = 1: a single anchor with F(l,m) != 0
    PencilPoint<Rat> x1(bf(1, {1, 0}), bf(2, {0, 0, 1}));
    auto a1 = choose_anchors(x1);
    CHECK(a1.size() == 1);
    CHECK(!x1.F().eval(a1.lambda(0), a1.mu(0)).is_zero());
    // over F_2 the candidate pool can run dry
    Fp::Ctx c2{2};
    BinaryForm<Fp> f2(3, c2);
    f2.coeff(1) = Fp(1, 2);
    f2.coeff(2) = Fp(1, 2);  // X0^2X1 + X0X1^2, vanishes on all of P^1(F_2)
    BinaryForm<Fp> g2(4, c2);
    g2.coeff(0) = Fp(1, 2);
    g2.coeff(4) = Fp(1, 2);
    PencilPoint<Fp> x2(f2, g2);
    CHECK_THROWS_AS(choose_anchors(x2), DomainError);
}

TEST_CASE("vanishing law and base locus agreement") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        int d1 = static_cast<int>(rng.uniform(2, 4));
        int d2 = static_cast<int>(rng.uniform(d1 + 1, 6));
        int s = static_cast<int>(rng.uniform(0, d1 - 1));
        auto x = random_pencil_in_stratum<Rat>(d1, d2, s, {}, rng);
        for (int i = 0; i <= d1 - 1; ++i) {
            bool in_w = base_locus_test(x, i, rng, 2);
            CHECK(in_w == (s != 0 && s <= i));
        }
    }
    // coprime x: never in any W_i; i = d1-1 iff resultant = 0
    for (int trial = 0; trial < 10; ++trial) {
        auto x = random_coprime_pencil<Rat>(3, 5, {}, rng);
        CHECK(!base_locus_test(x, 3 - 1, rng, 1));
        CHECK(!resultant(x.F(), x.G()).is_zero());
        auto y = random_pencil_in_stratum<Rat>(3, 5, 2, {}, rng);
        CHECK(base_locus_test(y, 3 - 1, rng, 1));
        CHECK(resultant(y.F(), y.G()).is_zero());
    }
}

TEST_CASE("gcd proportionality report") {
    Rng rng(43);
    // worked example: gcd = X0 exactly at index j = 0
    auto f = bf(1, {1, 0}) * bf(1, {1, 1});
    auto g = bf(1, {1, 0}) * bf(1, {0, 1}) * bf(1, {1, 2});
    PencilPoint<Rat> x(f, g);
    auto rep = gcd_proportionality(x, anchors_q({{1, 0}, {1, 1}}));
    CHECK(rep.precondition_ok);
    CHECK(rep.ok);
    CHECK(rep.j == 0);

    // coprime: R_{d1-1} is a nonzero scalar
    for (int trial = 0; trial < 20; ++trial) {
        auto y = random_coprime_pencil<Rat>(3, 5, {}, rng);
        auto a = choose_anchors(y);
        auto r = gcd_proportionality(y, a);
        CHECK(r.precondition_ok);
        CHECK(r.ok);
        CHECK(r.j == 2);
    }
    // full-degree gcd: j = 0, R_0 prop to gcd, all later zero
    for (int trial = 0; trial < 20; ++trial) {
        auto y = random_pencil_in_stratum<Rat>(3, 5, 1, {}, rng);
        auto a = choose_anchors(y);
        auto r = gcd_proportionality(y, a);
        CHECK(r.precondition_ok);
        CHECK(r.ok);
        CHECK(r.j == 0);
    }
}

TEST_CASE("section vectors: twist invariance and coprime endpoint") {
    Rng rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        int d1 = static_cast<int>(rng.uniform(2, 4));
        int d2 = static_cast<int>(rng.uniform(d1 + 1, 6));
        auto x = random_coprime_pencil<Rat>(d1, d2, {}, rng);
        auto a = choose_anchors(x);
        // twist G -> G + K F leaves the vector projectively unchanged
        auto k = random_form<Rat>(d2 - d1, {}, rng);
        PencilPoint<Rat> tw(x.F(), x.G() + k * x.F());
        for (int i = 0; i <= d1 - 1; ++i) {
            auto v = section_vector(x, a, i);
            auto w = section_vector(tw, a, i);
            CHECK(vectors_proportional(v, w));
        }
        // i = d1-1 on coprime x: 1-dimensional and nonzero
        auto last = section_vector(x, a, d1 - 1);
        CHECK(last.size() == 1);
        CHECK(!last[0].is_zero());
    }
}

TEST_CASE("universal-coefficient mode (2,3): divisions exact, identities hold") {
    // coefficients in Q[f0,f1,f2,g0,g1,g2,g3]
    using P = MPoly<Rat>;
    P::Ctx c{7, {"f0", "f1", "f2", "g0", "g1", "g2", "g3"}, {}};
    BinaryForm<P> F(2, c), G(3, c);
    for (int j = 0; j <= 2; ++j) F.coeff(j) = P::var(j, c);
    for (int j = 0; j <= 3; ++j) G.coeff(j) = P::var(3 + j, c);
    PencilPoint<P> x(F, G);
    auto a = AnchorList<P>::constant(P::one(c), P::zero(c), 2);  // (1,0) twice
    auto seq = remainder_sequence(x, a);  // throws if any division is not exact
    CHECK(seq.verify(x));
    CHECK(!seq.R[0].is_zero());
    CHECK(!seq.R[1].is_zero());
    // specialize at F = X0^2+X1^2, G = X0^3 and compare with the numeric run
    std::vector<Rat> vals{Rat(1, 1), Rat(), Rat(1, 1), Rat(1, 1), Rat(), Rat(), Rat()};
    PencilPoint<Rat> xn(bf(2, {1, 0, 1}), bf(3, {1, 0, 0, 0}));
    auto seqn = remainder_sequence(xn, AnchorList<Rat>::constant(Rat(1, 1), Rat(), 2));
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= seq.R[i].degree(); ++j)
            CHECK(seq.R[i].coeff(j).eval(vals, Rat::Ctx{}) == seqn.R[i].coeff(j));
}

TEST_CASE("characteristic-p regression: constant anchors die, per-step anchors work") {
    // over F_3, x = [X0^3, X1^6]
    Fp::Ctx c3{3};
    BinaryForm<Fp> F(3, c3), G(6, c3);
    F.coeff(0) = Fp(1, 3);
    G.coeff(6) = Fp(1, 3);
    PencilPoint<Fp> x(F, G);

    // per-step anchors (1,0),(1,1),(1,2): R_1 != 0 (hand value X0 + 2X1)
    std::vector<std::pair<Fp, Fp>> steps{{Fp(1, 3), Fp(0, 3)}, {Fp(1, 3), Fp(1, 3)}, {Fp(1, 3), Fp(2, 3)}};
    auto seq = remainder_sequence(x, AnchorList<Fp>(steps));
    CHECK(!seq.R[1].is_zero());
    BinaryForm<Fp> expected(1, c3);
    expected.coeff(0) = Fp(1, 3);
    expected.coeff(1) = Fp(2, 3);
    CHECK(seq.R[1] == expected);

    // constant anchors (1,1): R_0 = (X1-X0)^2 kills the step-1 anchor
    auto const_a = AnchorList<Fp>::constant(Fp(1, 3), Fp(1, 3), 3);
    CHECK_THROWS_AS(remainder_sequence(x, const_a), AnchorError);

    // the universal R_1 with constant anchors vanishes at this point:
    // keep g symbolic (f specialized), then evaluate at g = X1^6
    using P = MPoly<Fp>;
    P::Ctx cg{7, {"g0", "g1", "g2", "g3", "g4", "g5", "g6"}, c3};
    BinaryForm<P> Fu(3, cg), Gu(6, cg);
    Fu.coeff(0) = P::one(cg);
    for (int j = 0; j <= 6; ++j) Gu.coeff(j) = P::var(j, cg);
    PencilPoint<P> xu(Fu, Gu);
    for (long lam : {0L, 1L, 2L}) {
        // constant anchors (1, lam) for every u
        auto au = AnchorList<P>::constant(P::one(cg), P::from_int(lam, cg), 3);
        auto useq = remainder_sequence(xu, au);
        CHECK(!useq.R[1].is_zero());  // the universal section is nonzero...
        std::vector<Fp> at_point(7, Fp(0, 3));
        at_point[6] = Fp(1, 3);
        bool all_zero = true;
        for (int j = 0; j <= useq.R[1].degree(); ++j)
            if (!useq.R[1].coeff(j).eval(at_point, c3).is_zero()) all_zero = false;
        CHECK(all_zero);  // ...but vanishes at [X0^3, X1^6]
    }
}
