#ifndef CI2_EUCLID_HPP
#define CI2_EUCLID_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ci2/pencil.hpp"

namespace ci2 {

// Evaluation points (lambda_u, mu_u), u = 0..d1-1, each != (0,0).
// They may repeat or differ per index; per-index anchors are what make
// the construction work in finite characteristic.
template <class K>
struct AnchorList {
    std::vector<std::pair<K, K>> a;

    AnchorList() = default;
    explicit AnchorList(std::vector<std::pair<K, K>> v) : a(std::move(v)) {
        for (const auto& [l, m] : a)
            if (l.is_zero() && m.is_zero()) throw DomainError("anchor (0,0) is not allowed");
    }
    int size() const { return static_cast<int>(a.size()); }
    const K& lambda(int u) const { return a[u].first; }
    const K& mu(int u) const { return a[u].second; }

    static AnchorList constant(const K& l, const K& m, int n) {
        return AnchorList(std::vector<std::pair<K, K>>(n, {l, m}));
    }
};

// Anchored division: B(l,m)^(a-b+1) A = B Q + L_{l,m}^(a-b+1) R with
// deg Q = a-b, deg R = b-1, the unique such pair.  Works over any
// integral domain whose base-field anchors are units.
template <class K>
std::pair<BinaryForm<K>, BinaryForm<K>> divide_anchored(const BinaryForm<K>& A,
                                                        const BinaryForm<K>& B,
                                                        const K& lambda, const K& mu) {
    int a = A.degree(), b = B.degree();
    if (a < b || b < 1) throw DomainError("divide_anchored needs deg A >= deg B >= 1");
    K bval = B.eval(lambda, mu);
    if (bval.is_zero()) throw AnchorError(0, "invalid anchor for divisor");
    const auto& ctx = A.ctx();
    BinaryForm<K> L = BinaryForm<K>::anchor_line(lambda, mu, ctx);
    // L* with L*(lambda,mu) = 1
    BinaryForm<K> Lstar(1, ctx);
    if (!lambda.is_zero()) {
        auto li = K::exact_div(K::one(ctx), lambda);
        if (!li) throw DomainError("anchor not invertible");
        Lstar.coeff(0) = *li;
    } else {
        auto mi = K::exact_div(K::one(ctx), mu);
        if (!mi) throw DomainError("anchor not invertible");
        Lstar.coeff(1) = *mi;
    }
    int e = a - b + 1;
    BinaryForm<K> q(a - b, ctx);
    BinaryForm<K> r = A;
    BinaryForm<K> lpow = BinaryForm<K>::monomial(0, 0, K::one(ctx), ctx);  // L^j
    std::vector<BinaryForm<K>> lstar_pow{BinaryForm<K>::monomial(0, 0, K::one(ctx), ctx)};
    for (int i = 1; i <= a - b; ++i) lstar_pow.push_back(lstar_pow.back() * Lstar);
    for (int j = 0; j < e; ++j) {
        K rval = r.eval(lambda, mu);
        // q_{j+1} = B(l,m) q_j + r_j(l,m) L*^(a-b-j) L^j
        q = q * bval + (lstar_pow[a - b - j] * lpow) * rval;
        // r_{j+1} = (B(l,m) r_j - r_j(l,m) L*^(a-b-j) B) / L
        BinaryForm<K> num = r * bval - lstar_pow[a - b - j] * B * rval;
        r = num.divide_by_anchor_line(lambda, mu);
        if (j + 1 <= a - b) lpow = lpow * L;
    }
    return {q, r};
}

// The scalar data tied to one step of the remainder sequence.
template <class K>
struct SequenceStep {
    K lhs_scale;   // B(lambda_i,mu_i)^(e_i), multiplying the dividend
    K cofactor;    // divisor applied to the raw remainder (1 at step 0)
};

template <class K>
struct RemainderSequence {
    int d1 = 0, d2 = 0;
    AnchorList<K> anchors;
    std::vector<BinaryForm<K>> R;  // R[i] has declared degree d1-1-i
    std::vector<BinaryForm<K>> Q;
    std::vector<SequenceStep<K>> steps;
    int truncation = -1;  // first i with R_i = 0; -1 if none

    // Re-checks the identity families exactly; used by tests and by the
    // randomized suites as the zero-residual oracle.
    bool verify(const PencilPoint<K>& x) const {
        const auto& ctx = x.ctx();
        int e = d2 - d1 + 1;
        auto line = [&](int u) {
            return BinaryForm<K>::anchor_line(anchors.lambda(u), anchors.mu(u), ctx);
        };
        auto power = [&](BinaryForm<K> base, int n) {
            BinaryForm<K> acc = BinaryForm<K>::monomial(0, 0, K::one(ctx), ctx);
            for (int i = 0; i < n; ++i) acc = acc * base;
            return acc;
        };
        // identity1
        {
            K a0 = x.F().eval(anchors.lambda(0), anchors.mu(0));
            K s = K::one(ctx);
            for (int i = 0; i < e; ++i) s = s * a0;
            auto lhs = x.G() * s;
            auto rhs = x.F() * Q[0] + power(line(0), e) * R[0];
            if (!(lhs == rhs)) return false;
            if (R[0].degree() != d1 - 1) return false;
        }
        // identity2
        if (d1 >= 2) {
            K r0v = R[0].eval(anchors.lambda(1), anchors.mu(1));
            K a0 = x.F().eval(anchors.lambda(0), anchors.mu(0));
            K s = K::one(ctx);
            for (int i = 0; i < e; ++i) s = s * a0;
            auto lhs = x.F() * (r0v * r0v);
            auto rhs = R[0] * Q[1] + power(line(1), 2) * R[1] * s;
            if (!(lhs == rhs)) return false;
            if (R[1].degree() != d1 - 2) return false;
        }
        // identity_i
        for (int i = 2; i <= d1 - 1; ++i) {
            K riv = R[i - 1].eval(anchors.lambda(i), anchors.mu(i));
            K cv = R[i - 2].eval(anchors.lambda(i - 1), anchors.mu(i - 1));
            auto lhs = R[i - 2] * (riv * riv);
            auto rhs = R[i - 1] * Q[i] + power(line(i), 2) * R[i] * (cv * cv);
            if (!(lhs == rhs)) return false;
            if (R[i].degree() != d1 - 1 - i) return false;
        }
        // zero-remainder convention
        bool zero_seen = false;
        for (int i = 0; i <= d1 - 1; ++i) {
            if (zero_seen && !R[i].is_zero()) return false;
            if (R[i].is_zero()) zero_seen = true;
        }
        return true;
    }
};

// The anchored Euclidean sequence of the pencil point.  Exactness of
// every internal cofactor division is asserted at runtime; a failure
// would falsify the divisibility lemmas the construction rests on.
template <class K>
RemainderSequence<K> remainder_sequence(const PencilPoint<K>& x, const AnchorList<K>& anchors) {
    int d1 = x.d1(), d2 = x.d2();
    if (anchors.size() != d1) throw DomainError("anchor list must have length d1");
    const auto& ctx = x.ctx();
    RemainderSequence<K> seq;
    seq.d1 = d1;
    seq.d2 = d2;
    seq.anchors = anchors;

    K f0 = x.F().eval(anchors.lambda(0), anchors.mu(0));
    if (f0.is_zero()) throw AnchorError(0, "F vanishes at anchor 0");
    int e = d2 - d1 + 1;
    K f0e = K::one(ctx);
    for (int i = 0; i < e; ++i) f0e = f0e * f0;

    auto [q0, r0] = divide_anchored(x.G(), x.F(), anchors.lambda(0), anchors.mu(0));
    seq.Q.push_back(q0);
    seq.R.push_back(r0);
    seq.steps.push_back({f0e, K::one(ctx)});
    if (r0.is_zero()) seq.truncation = 0;  // cannot happen for a valid pencil point

    for (int i = 1; i <= d1 - 1; ++i) {
        const BinaryForm<K>& prev = seq.R[i - 1];                            // R_{i-1}
        const BinaryForm<K>& prev2 = i >= 2 ? seq.R[i - 2] : x.F();          // R_{i-2}
        if (prev.is_zero()) {
            seq.R.push_back(BinaryForm<K>::zero(d1 - 1 - i, ctx));
            seq.Q.push_back(BinaryForm<K>::zero(1, ctx));
            seq.steps.push_back({K::zero(ctx), K::zero(ctx)});
            continue;
        }
        K pv = prev.eval(anchors.lambda(i), anchors.mu(i));
        if (pv.is_zero()) throw AnchorError(i, "remainder vanishes at anchor " + std::to_string(i));
        // cofactor: F(l0,m0)^(d2-d1+1) at step 1, R_{i-2}(l_{i-1},m_{i-1})^2 later
        K cof;
        if (i == 1) {
            cof = f0e;
        } else {
            K c = prev2.eval(anchors.lambda(i - 1), anchors.mu(i - 1));
            cof = c * c;
        }
        auto [qt, rt] = divide_anchored(prev2, prev, anchors.lambda(i), anchors.mu(i));
        BinaryForm<K> ri(d1 - 1 - i, ctx);
        for (int j = 0; j <= ri.degree(); ++j) {
            auto c = K::exact_div(rt.coeff(j), cof);
            if (!c) throw DomainError("cofactor division not exact at step " + std::to_string(i));
            ri.coeff(j) = *c;
        }
        seq.Q.push_back(qt);
        seq.R.push_back(ri);
        seq.steps.push_back({pv * pv, cof});
        if (ri.is_zero() && seq.truncation < 0) seq.truncation = i;
    }
    return seq;
}

// Candidate anchors (1, c) for c walking through the field, plus (0,1).
template <class K>
std::vector<std::pair<K, K>> candidate_anchors(const typename K::Ctx& ctx, int n) {
    std::vector<std::pair<K, K>> out;
    long p = K::characteristic(ctx);
    long limit = p == 0 ? n : std::min<long>(n, p);
    for (long c = 0; c < limit; ++c)
        out.push_back({K::one(ctx), K::from_int(c, ctx)});
    out.push_back({K::zero(ctx), K::one(ctx)});
    return out;
}

// Sequence truncated to indices 0..upto (needs anchors 0..upto only).
template <class K>
RemainderSequence<K> partial_sequence(const PencilPoint<K>& x,
                                      const std::vector<std::pair<K, K>>& picked, int upto) {
    int d1 = x.d1(), d2 = x.d2();
    const auto& ctx = x.ctx();
    RemainderSequence<K> seq;
    seq.d1 = d1;
    seq.d2 = d2;

    K f0 = x.F().eval(picked[0].first, picked[0].second);
    if (f0.is_zero()) throw AnchorError(0, "F vanishes at anchor 0");
    int e = d2 - d1 + 1;
    K f0e = K::one(ctx);
    for (int i = 0; i < e; ++i) f0e = f0e * f0;

    auto [q0, r0] = divide_anchored(x.G(), x.F(), picked[0].first, picked[0].second);
    seq.Q.push_back(q0);
    seq.R.push_back(r0);
    for (int i = 1; i <= upto; ++i) {
        const BinaryForm<K>& prev = seq.R[i - 1];
        const BinaryForm<K>& prev2 = i >= 2 ? seq.R[i - 2] : x.F();
        if (prev.is_zero()) {
            seq.R.push_back(BinaryForm<K>::zero(d1 - 1 - i, ctx));
            seq.Q.push_back(BinaryForm<K>::zero(1, ctx));
            continue;
        }
        K pv = prev.eval(picked[i].first, picked[i].second);
        if (pv.is_zero()) throw AnchorError(i, "remainder vanishes at anchor");
        K cof;
        if (i == 1) {
            cof = f0e;
        } else {
            K c = prev2.eval(picked[i - 1].first, picked[i - 1].second);
            cof = c * c;
        }
        auto [qt, rt] = divide_anchored(prev2, prev, picked[i].first, picked[i].second);
        BinaryForm<K> ri(d1 - 1 - i, ctx);
        for (int j = 0; j <= ri.degree(); ++j) {
            auto c = K::exact_div(rt.coeff(j), cof);
            if (!c) throw DomainError("cofactor division not exact");
            ri.coeff(j) = *c;
        }
        seq.Q.push_back(qt);
        seq.R.push_back(ri);
    }
    return seq;
}

// Greedy anchor selection: pick (l0,m0) off F's roots, then each next
// anchor off the roots of the previous remainder.  Guarantees R_i != 0
// for every i up to the gcd-forced truncation; errors when the field
// is too small to supply the pool.
template <class K>
AnchorList<K> choose_anchors(const PencilPoint<K>& x) {
    int d1 = x.d1(), d2 = x.d2();
    auto pool = candidate_anchors<K>(x.ctx(), d1 * d2 + 2);
    std::vector<std::pair<K, K>> picked;
    auto pick = [&](const BinaryForm<K>& target) {
        for (const auto& cand : pool)
            if (!target.eval(cand.first, cand.second).is_zero()) return cand;
        throw DomainError("exhausted anchor candidate pool (field too small)");
    };
    picked.push_back(pick(x.F()));
    for (int i = 1; i <= d1 - 1; ++i) {
        auto head = partial_sequence(x, picked, i - 1);
        const auto& target = head.R[i - 1];
        picked.push_back(target.is_zero() ? pool.front() : pick(target));
    }
    return AnchorList<K>(picked);
}

// Random anchors subject to validity, for batch testing around the
// greedy choice.
template <class K>
AnchorList<K> random_valid_anchors(const PencilPoint<K>& x, Rng& rng, int tries = 200) {
    int d1 = x.d1();
    const auto& ctx = x.ctx();
    for (int attempt = 0; attempt < tries; ++attempt) {
        std::vector<std::pair<K, K>> a;
        for (int u = 0; u < d1; ++u) {
            K l = random_element(ctx, rng), m = random_element(ctx, rng);
            if (l.is_zero() && m.is_zero()) l = K::one(ctx);
            a.push_back({l, m});
        }
        try {
            auto seq = remainder_sequence(x, AnchorList<K>(a));
            (void)seq;
            return AnchorList<K>(a);
        } catch (const AnchorError&) {
            continue;
        }
    }
    throw DomainError("could not sample valid anchors");
}

// x in W_i?  Decided two ways that must agree: the gcd criterion and
// the vanishing of R_i across anchor choices.
template <class K>
bool base_locus_test(const PencilPoint<K>& x, int i, Rng& rng, int random_batches = 3) {
    if (i < 0 || i > x.d1() - 1) throw DomainError("base_locus_test index out of range");
    bool by_gcd = in_stratum_w(x, i);

    auto greedy = choose_anchors(x);
    auto seq = remainder_sequence(x, greedy);
    bool vanish = seq.R[i].is_zero();
    if (vanish != by_gcd)
        throw DomainError("base locus routes disagree (greedy anchors)");
    for (int b = 0; b < random_batches; ++b) {
        auto a = random_valid_anchors(x, rng);
        auto s = remainder_sequence(x, a);
        if (by_gcd && !s.R[i].is_zero())
            throw DomainError("base locus routes disagree (random anchors)");
    }
    return by_gcd;
}

// Report for the gcd-proportionality law: R_j = c * gcd(F,G) with c a
// nonzero scalar, and R_m = 0 beyond.
template <class K>
struct GcdProportionalityReport {
    bool precondition_ok = false;
    bool ok = false;
    int j = -1;  // index with deg R_j = deg gcd
    std::string detail;
};

template <class K>
GcdProportionalityReport<K> gcd_proportionality(const PencilPoint<K>& x, const AnchorList<K>& anchors) {
    GcdProportionalityReport<K> rep;
    auto pi = gcd_forms(x.F(), x.G());
    int j = x.d1() - 1 - pi.degree();
    rep.j = j;
    for (int u = 0; u <= j; ++u) {
        if (pi.eval(anchors.lambda(u), anchors.mu(u)).is_zero()) {
            rep.detail = "gcd vanishes at anchor " + std::to_string(u);
            return rep;
        }
    }
    RemainderSequence<K> seq;
    try {
        seq = remainder_sequence(x, anchors);
    } catch (const AnchorError& e) {
        rep.detail = std::string("anchor error: ") + e.what();
        return rep;
    }
    rep.precondition_ok = true;
    if (!proportional(seq.R[j], pi)) {
        rep.detail = "R_j not proportional to gcd";
        return rep;
    }
    for (int m = j + 1; m <= x.d1() - 1; ++m)
        if (!seq.R[m].is_zero()) {
            rep.detail = "R_m nonzero beyond the gcd index";
            return rep;
        }
    rep.ok = true;
    return rep;
}

// Coefficient vector of R_i computed from the canonical representative;
// well-defined up to one global scalar on the equivalence class.
template <class K>
std::vector<K> section_vector(const PencilPoint<K>& x, const AnchorList<K>& anchors, int i) {
    auto canon = pencil_normalize_auto(x);
    auto seq = remainder_sequence(canon, anchors);
    return seq.R[i].coeffs();
}

template <class K>
bool vectors_proportional(const std::vector<K>& a, const std::vector<K>& b) {
    if (a.size() != b.size()) return false;
    std::size_t j0 = a.size();
    for (std::size_t j = 0; j < a.size(); ++j)
        if (!a[j].is_zero() || !b[j].is_zero()) { j0 = j; break; }
    if (j0 == a.size()) return true;  // both zero
    if (a[j0].is_zero() || b[j0].is_zero()) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] * b[j0] != b[j] * a[j0]) return false;
    return true;
}

} // namespace ci2

#endif
