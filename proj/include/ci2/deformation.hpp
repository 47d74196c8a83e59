#ifndef CI2_DEFORMATION_HPP
#define CI2_DEFORMATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ci2/euclid.hpp"
#include "ci2/resultant.hpp"
#include "ci2/upoly.hpp"

namespace ci2 {

// Data of a one-parameter degeneration into W_k: the special fiber is
// [PL, PH] and the tangent direction is [Phi, Gamma].
template <class K>
struct DeformationDatum {
    int d1, d2, k;
    BinaryForm<K> P;      // deg d1-k
    BinaryForm<K> L;      // deg k
    BinaryForm<K> H;      // deg d2-d1+k
    BinaryForm<K> Phi;    // deg d1
    BinaryForm<K> Gamma;  // deg d2

    DeformationDatum(int d1_, int d2_, int k_, BinaryForm<K> p, BinaryForm<K> l, BinaryForm<K> h,
                     BinaryForm<K> phi, BinaryForm<K> gamma)
        : d1(d1_), d2(d2_), k(k_), P(std::move(p)), L(std::move(l)), H(std::move(h)),
          Phi(std::move(phi)), Gamma(std::move(gamma)) {
        if (k < 1 || k > d1 - 1) throw DomainError("deformation needs 1 <= k <= d1-1");
        if (P.degree() != d1 - k || L.degree() != k || H.degree() != d2 - d1 + k ||
            Phi.degree() != d1 || Gamma.degree() != d2)
            throw DomainError("deformation degree mismatch");
        if (P.is_zero() || L.is_zero() || H.is_zero())
            throw DomainError("deformation with zero P, L or H");
        // [L, H] must be a pencil point of the (k, d2-d1+k) space
        if (divides_form(L, H)) throw DomainError("H is a multiple of L");
        // the generic fiber must be off the deeper strata: gcd over k(t) constant,
        // equivalently res_X(PL + t Phi, PH + t Gamma) != 0 in k[t]
        auto [f, g] = assemble();
        if (resultant(f, g).is_zero())
            throw DomainError("deformation is generically degenerate");
    }

    // (F, G) = (PL + t Phi, PH + t Gamma) over k[t]
    std::pair<BinaryForm<UPoly<K>>, BinaryForm<UPoly<K>>> assemble() const {
        typename UPoly<K>::Ctx tc{P.ctx(), "t"};
        auto lift = [&](const BinaryForm<K>& f) {
            return f.template map<UPoly<K>>(tc, [&](const K& c) { return UPoly<K>::constant(c, tc); });
        };
        auto tpoly = UPoly<K>::t(tc);
        auto F = lift(P * L);
        auto tPhi = lift(Phi);
        for (int j = 0; j <= F.degree(); ++j) F.coeff(j) += tpoly * tPhi.coeff(j);
        auto G = lift(P * H);
        auto tGamma = lift(Gamma);
        for (int j = 0; j <= G.degree(); ++j) G.coeff(j) += tpoly * tGamma.coeff(j);
        return {F, G};
    }
};

template <class K>
PencilPoint<UPoly<K>> deform(const DeformationDatum<K>& d) {
    auto [f, g] = d.assemble();
    return PencilPoint<UPoly<K>>(f, g);
}

// Anchor layout shared by the deformation laws: the main sequence uses
// (l_u, m_u) for u = 0..d1-1; the sequence of (L, H) uses u = 0..k-1;
// the sequence of ((-1)^k (Gamma L - H Phi), P) uses u = 0, k+1, .., d1-1.
template <class K>
struct ReferenceSequences {
    std::vector<BinaryForm<K>> rbar;    // from the pair (L, H), indices 0..k-1
    std::vector<BinaryForm<K>> rtilde;  // from ((-1)^k (Gamma L - H Phi), P), indices 0..d1-k-1
};

template <class K>
ReferenceSequences<K> reference_sequences(const DeformationDatum<K>& d, const AnchorList<K>& anchors) {
    if (anchors.size() != d.d1) throw DomainError("anchor list must have length d1");
    ReferenceSequences<K> out;
    // rbar: remainder sequence of [L, H] with anchors l_0..l_{k-1}
    {
        std::vector<std::pair<K, K>> a;
        for (int u = 0; u < d.k; ++u) a.push_back({anchors.lambda(u), anchors.mu(u)});
        PencilPoint<K> lh(d.L, d.H);
        out.rbar = remainder_sequence(lh, AnchorList<K>(a)).R;
    }
    // rtilde: remainder sequence of [P, (-1)^k (Gamma L - H Phi)] with
    // anchors l_0, l_{k+1}, ..., l_{d1-1}
    {
        BinaryForm<K> gl = d.Gamma * d.L - d.H * d.Phi;
        if (d.k % 2 == 1) gl = -gl;
        std::vector<std::pair<K, K>> a;
        a.push_back({anchors.lambda(0), anchors.mu(0)});
        for (int u = d.k + 1; u <= d.d1 - 1; ++u) a.push_back({anchors.lambda(u), anchors.mu(u)});
        PencilPoint<K> pg(d.P, gl);
        out.rtilde = remainder_sequence(pg, AnchorList<K>(a)).R;
    }
    return out;
}

// One law-check record of the deformation report.
struct LawRecord {
    std::string law;   // "a", "b" or "c"
    int index;         // the i it concerns
    bool pass;
    std::string detail;
};

template <class K>
struct DeformationReport {
    bool pass = true;
    std::vector<int> val_t;                    // val_t(R_i) per index, -1 for R_i = 0
    std::vector<BinaryForm<K>> s;              // s_i with r_i^[0] = p s_i, i <= k-1
    std::vector<LawRecord> records;
    bool strict_valuation = true;              // val_t == i-k+1 everywhere it applies

    void fail(const std::string& law, int i, const std::string& why) {
        pass = false;
        records.push_back({law, i, false, why});
    }
    void ok(const std::string& law, int i) { records.push_back({law, i, true, ""}); }
};

// Checks, exactly over k[t]:
//   (a) val_t(R_i) >= i-k+1               for k <= i <= d1-1
//   (b) R_i^[0] = P(l0,m0)^(d2-d1+1) prod_j P(l_j,m_j)^2 P rbar_i   for i <= k-1
//   (c) R_i^[i-k+1] = rbar_{k-1} rtilde_{i-k}    for k <= i <= d1-1
// Law (c) requires the first k+1 anchors to coincide; the operation
// enforces this rather than checking (c) approximately.
template <class K>
DeformationReport<K> verify_deformation_laws(const DeformationDatum<K>& d, const AnchorList<K>& anchors) {
    if (anchors.size() != d.d1) throw DomainError("anchor list must have length d1");
    for (int u = 1; u <= d.k; ++u)
        if (anchors.lambda(u) != anchors.lambda(0) || anchors.mu(u) != anchors.mu(0))
            throw DomainError("law (c) requires equal anchors for u = 0..k");

    const auto& base = d.P.ctx();
    typename UPoly<K>::Ctx tc{base, "t"};
    auto x = deform(d);
    // anchors lifted to constants of k[t]
    std::vector<std::pair<UPoly<K>, UPoly<K>>> alift;
    for (int u = 0; u < d.d1; ++u)
        alift.push_back({UPoly<K>::constant(anchors.lambda(u), tc),
                         UPoly<K>::constant(anchors.mu(u), tc)});
    auto seq = remainder_sequence(x, AnchorList<UPoly<K>>(alift));
    auto ref = reference_sequences(d, anchors);

    DeformationReport<K> rep;
    rep.val_t.assign(d.d1, -1);
    for (int i = 0; i <= d.d1 - 1; ++i)
        if (!seq.R[i].is_zero()) rep.val_t[i] = form_valuation_t(seq.R[i]);

    // (b), and the s_i bookkeeping (only defined for i <= k-1)
    for (int i = 0; i <= d.k - 1; ++i) {
        auto r0 = form_t_coefficient(seq.R[i], 0, base);
        K scale = K::one(base);
        K p0 = d.P.eval(anchors.lambda(0), anchors.mu(0));
        for (int j = 0; j < d.d2 - d.d1 + 1; ++j) scale = scale * p0;
        for (int j = 1; j <= i; ++j) {
            K pj = d.P.eval(anchors.lambda(j), anchors.mu(j));
            scale = scale * pj * pj;
        }
        auto rhs = d.P * ref.rbar[i] * scale;
        if (r0 == rhs) rep.ok("b", i);
        else rep.fail("b", i, "R_" + std::to_string(i) + "^[0] != scale * P * rbar");
        auto q = BinaryForm<K>::exact_div(r0, d.P);
        if (q) rep.s.push_back(*q);
        else rep.fail("b", i, "P does not divide R_" + std::to_string(i) + "^[0]");
    }

    // (a) and (c)
    for (int i = d.k; i <= d.d1 - 1; ++i) {
        int want = i - d.k + 1;
        if (seq.R[i].is_zero()) {
            // a zero remainder satisfies (a) vacuously; (c) then claims the
            // product vanishes
            rep.ok("a", i);
            rep.strict_valuation = false;
            auto prod = ref.rbar[d.k - 1] * ref.rtilde[i - d.k];
            if (prod.is_zero()) rep.ok("c", i);
            else rep.fail("c", i, "R_i = 0 but rbar_{k-1} rtilde_{i-k} != 0");
            continue;
        }
        if (rep.val_t[i] >= want) rep.ok("a", i);
        else rep.fail("a", i, "val_t(R_" + std::to_string(i) + ") = " +
                                  std::to_string(rep.val_t[i]) + " < " + std::to_string(want));
        if (rep.val_t[i] != want) rep.strict_valuation = false;
        auto lhs = form_t_coefficient(seq.R[i], want, base);
        auto rhs = ref.rbar[d.k - 1] * ref.rtilde[i - d.k];
        if (lhs == rhs) rep.ok("c", i);
        else rep.fail("c", i, "R_i^[i-k+1] != rbar_{k-1} rtilde_{i-k} at i = " + std::to_string(i));
    }
    return rep;
}

// Random datum with valid generic fiber; anchors are sampled separately.
template <class K>
DeformationDatum<K> random_deformation(int d1, int d2, int k, const typename K::Ctx& ctx, Rng& rng) {
    for (int tries = 0; tries < 2000; ++tries) {
        auto p = random_nonzero_form<K>(d1 - k, ctx, rng);
        auto l = random_nonzero_form<K>(k, ctx, rng);
        auto h = random_nonzero_form<K>(d2 - d1 + k, ctx, rng);
        auto phi = random_form<K>(d1, ctx, rng);
        auto gamma = random_form<K>(d2, ctx, rng);
        // the rtilde pair needs [P, (-1)^k (Gamma L - H Phi)] to be a pencil point
        auto gl = gamma * l - h * phi;
        if (gl.is_zero() || divides_form(p, gl)) continue;
        try {
            return DeformationDatum<K>(d1, d2, k, p, l, h, phi, gamma);
        } catch (const DomainError&) {
            continue;
        }
    }
    throw DomainError("could not sample a deformation datum");
}

// Anchors for the deformation laws: equal for u = 0..k, free afterwards,
// subject to every validity constraint the three sequences impose.
template <class K>
AnchorList<K> random_deformation_anchors(const DeformationDatum<K>& d, Rng& rng, int tries = 500) {
    const auto& ctx = d.P.ctx();
    for (int attempt = 0; attempt < tries; ++attempt) {
        K l0 = random_element(ctx, rng), m0 = random_element(ctx, rng);
        if (l0.is_zero() && m0.is_zero()) l0 = K::one(ctx);
        std::vector<std::pair<K, K>> a(d.k + 1, {l0, m0});
        for (int u = d.k + 1; u < d.d1; ++u) {
            K l = random_element(ctx, rng), m = random_element(ctx, rng);
            if (l.is_zero() && m.is_zero()) l = K::one(ctx);
            a.push_back({l, m});
        }
        AnchorList<K> al(a);
        // P must not vanish where its evaluations enter the laws
        bool pok = true;
        for (int u = 0; u < d.d1; ++u)
            if (d.P.eval(al.lambda(u), al.mu(u)).is_zero()) pok = false;
        if (!pok) continue;
        try {
            (void)reference_sequences(d, al);
            auto x = deform(d);
            typename UPoly<K>::Ctx tc{ctx, "t"};
            std::vector<std::pair<UPoly<K>, UPoly<K>>> alift;
            for (int u = 0; u < d.d1; ++u)
                alift.push_back({UPoly<K>::constant(al.lambda(u), tc),
                                 UPoly<K>::constant(al.mu(u), tc)});
            (void)remainder_sequence(x, AnchorList<UPoly<K>>(alift));
            return al;
        } catch (const AnchorError&) {
            continue;
        }
    }
    throw DomainError("could not sample valid deformation anchors");
}

} // namespace ci2

#endif
