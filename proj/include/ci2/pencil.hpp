#ifndef CI2_PENCIL_HPP
#define CI2_PENCIL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ci2/binary_form.hpp"
#include "ci2/linalg.hpp"
#include "ci2/resultant.hpp"

namespace ci2 {

// A point [F, G] of the parameter space: deg F = d1 < deg G = d2, F
// nonzero, G not a polynomial multiple of F.  Two points are the same
// iff F' = cF and G' = c'G + K*F.
template <class K>
class PencilPoint {
public:
    PencilPoint(BinaryForm<K> f, BinaryForm<K> g) : f_(std::move(f)), g_(std::move(g)) {
        if (f_.degree() < 1 || f_.degree() >= g_.degree())
            throw DomainError("pencil point needs 1 <= d1 < d2");
        if (f_.is_zero()) throw DomainError("pencil point with zero F");
        if (divides_form(f_, g_)) throw DomainError("pencil point with G a multiple of F");
    }

    int d1() const { return f_.degree(); }
    int d2() const { return g_.degree(); }
    const BinaryForm<K>& F() const { return f_; }
    const BinaryForm<K>& G() const { return g_; }
    const typename K::Ctx& ctx() const { return f_.ctx(); }

private:
    BinaryForm<K> f_, g_;
};

// ---- coordinate frames on P^1 ---------------------------------------

// Substitute X_i -> sum_j A(i,j) X_j into a binary form.
template <class K>
BinaryForm<K> transform_form(const BinaryForm<K>& f, const Mat<K>& a) {
    int d = f.degree();
    BinaryForm<K> l0(1, f.ctx()), l1(1, f.ctx());
    l0.coeff(0) = a(0, 0); l0.coeff(1) = a(0, 1);
    l1.coeff(0) = a(1, 0); l1.coeff(1) = a(1, 1);
    std::vector<BinaryForm<K>> p0{BinaryForm<K>::monomial(0, 0, K::one(f.ctx()), f.ctx())};
    std::vector<BinaryForm<K>> p1 = p0;
    for (int i = 1; i <= d; ++i) {
        p0.push_back(p0.back() * l0);
        p1.push_back(p1.back() * l1);
    }
    BinaryForm<K> out(d, f.ctx());
    for (int j = 0; j <= d; ++j) {
        if (f.coeff(j).is_zero()) continue;
        out += (p0[d - j] * p1[j]) * f.coeff(j);
    }
    return out;
}

// Frames tried by the automatic search: vary the point (1, c) at which
// F must not vanish, plus the coordinate swap hitting (0, 1).
template <class K>
std::vector<Mat<K>> candidate_frames(const typename K::Ctx& ctx, int count) {
    std::vector<Mat<K>> out;
    for (int c = 0; c < count; ++c) {
        Mat<K> m = Mat<K>::identity(2, ctx);
        m(1, 0) = K::from_int(c, ctx);
        out.push_back(m);
    }
    Mat<K> sw(2, 2, ctx);
    sw(0, 1) = K::one(ctx);
    sw(1, 0) = K::one(ctx);
    out.push_back(sw);
    return out;
}

template <class K>
bool frame_valid_for(const BinaryForm<K>& f, const Mat<K>& frame) {
    return !f.eval(frame(0, 0), frame(1, 0)).is_zero();
}

// ---- leading reduction and canonical representatives ----------------

// Reduce G modulo F so that no monomial of the remainder is divisible
// by X0^d1, in the given frame's coordinates.  F's X0^d1 coefficient
// must be a unit there.  Returns (Q, R) with G' = Q*F' + R, primed
// forms living in frame coordinates.
template <class K>
std::pair<BinaryForm<K>, BinaryForm<K>> reduce_leading(const BinaryForm<K>& f,
                                                       const BinaryForm<K>& g,
                                                       const Mat<K>& frame) {
    static_assert(K::is_field, "leading reduction over a field");
    BinaryForm<K> ff = transform_form(f, frame);
    BinaryForm<K> r = transform_form(g, frame);
    int d1 = ff.degree(), d2 = r.degree();
    if (ff.coeff(0).is_zero()) throw FrameError("frame invalid for F");
    K inv = ff.coeff(0).inv();
    BinaryForm<K> q(d2 - d1, f.ctx());
    for (int j = 0; j <= d2 - d1; ++j) {
        K c = r.coeff(j) * inv;
        if (c.is_zero()) continue;
        q.coeff(j) = c;
        // subtract c * X0^(d2-d1-j) X1^j * F
        for (int i = 0; i <= d1; ++i) r.coeff(j + i) -= c * ff.coeff(i);
    }
    return {q, r};
}

// Canonical representative in a frame: F monic in X0^d1, G reduced so
// no monomial is divisible by X0^d1, then scaled by its first nonzero
// coefficient.  Equal pencil points give identical output in the same
// frame.
template <class K>
PencilPoint<K> pencil_normalize(const PencilPoint<K>& x, const Mat<K>& frame) {
    static_assert(K::is_field, "normalization over a field");
    if (!frame_valid_for(x.F(), frame)) throw FrameError("frame invalid for F");
    BinaryForm<K> f = transform_form(x.F(), frame);
    f = f * f.coeff(0).inv();
    auto [q, r] = reduce_leading(x.F(), x.G(), frame);
    (void)q;
    int j0 = 0;
    while (r.coeff(j0).is_zero()) ++j0;  // r != 0 because G is not a multiple of F
    r = r * r.coeff(j0).inv();
    return PencilPoint<K>(f, r);
}

// Automatic frame search; over a tiny field every candidate may fail,
// which is reported rather than papered over.
template <class K>
Mat<K> find_frame(const BinaryForm<K>& f, int pool = 0) {
    int count = pool > 0 ? pool : f.degree() + 1;
    for (const auto& fr : candidate_frames<K>(f.ctx(), count))
        if (frame_valid_for(f, fr)) return fr;
    throw FrameError("no sampled frame makes F's leading coefficient nonzero");
}

template <class K>
PencilPoint<K> pencil_normalize_auto(const PencilPoint<K>& x) {
    return pencil_normalize(x, find_frame(x.F()));
}

// ---- strata ----------------------------------------------------------

// Index i of the open stratum W_i \ W_{i-1} containing x, i.e.
// d1 - deg gcd(F, G); 0 means deg gcd = 0 (interior, resultant != 0).
template <class K>
int stratum_index(const PencilPoint<K>& x) {
    int g = gcd_degree(x.F(), x.G());
    return g == 0 ? 0 : x.d1() - g;
}

template <class K>
bool in_stratum_w(const PencilPoint<K>& x, int i) {
    // W_i = { deg gcd >= d1 - i }; W_0 is empty
    return gcd_degree(x.F(), x.G()) >= x.d1() - i;
}

// Same point of the parameter space?  F's proportional and G's equal
// up to scale modulo F.
template <class K>
bool same_point(const PencilPoint<K>& x, const PencilPoint<K>& y) {
    if (x.d1() != y.d1() || x.d2() != y.d2()) return false;
    if (!proportional(x.F(), y.F())) return false;
    Mat<K> frame = find_frame(x.F());
    auto rx = reduce_leading(x.F(), x.G(), frame).second;
    auto ry = reduce_leading(y.F(), y.G(), frame).second;
    return proportional(rx, ry);
}

// ---- random sampling --------------------------------------------------

template <class K>
PencilPoint<K> random_pencil(int d1, int d2, const typename K::Ctx& ctx, Rng& rng) {
    for (int tries = 0; tries < 1000; ++tries) {
        auto f = random_nonzero_form<K>(d1, ctx, rng);
        auto g = random_nonzero_form<K>(d2, ctx, rng);
        if (!divides_form(f, g)) return PencilPoint<K>(f, g);
    }
    throw DomainError("could not sample a pencil point");
}

template <class K>
PencilPoint<K> random_coprime_pencil(int d1, int d2, const typename K::Ctx& ctx, Rng& rng) {
    for (int tries = 0; tries < 1000; ++tries) {
        auto f = random_nonzero_form<K>(d1, ctx, rng);
        auto g = random_nonzero_form<K>(d2, ctx, rng);
        if (gcd_degree(f, g) == 0) return PencilPoint<K>(f, g);
    }
    throw DomainError("could not sample a coprime pencil point");
}

// Random point with deg gcd(F,G) exactly d1 - s (stratum index s >= 1),
// or a coprime point for s = 0.
template <class K>
PencilPoint<K> random_pencil_in_stratum(int d1, int d2, int s, const typename K::Ctx& ctx, Rng& rng) {
    if (s == 0) return random_coprime_pencil<K>(d1, d2, ctx, rng);
    if (s < 1 || s > d1 - 1) throw DomainError("stratum index out of range");
    for (int tries = 0; tries < 1000; ++tries) {
        auto pi = random_nonzero_form<K>(d1 - s, ctx, rng);
        auto f1 = random_nonzero_form<K>(s, ctx, rng);
        auto g1 = random_nonzero_form<K>(d2 - d1 + s, ctx, rng);
        if (gcd_degree(f1, g1) != 0) continue;
        return PencilPoint<K>(pi * f1, pi * g1);
    }
    throw DomainError("could not sample a stratum point");
}

} // namespace ci2

#endif
