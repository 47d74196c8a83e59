#ifndef CI2_CURVES_HPP
#define CI2_CURVES_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ci2/ext.hpp"
#include "ci2/multi_form.hpp"
#include "ci2/pencil.hpp"
#include "ci2/ratfunc.hpp"
#include "ci2/resultant.hpp"

namespace ci2 {

// ---- root extraction over the base field ------------------------------

template <class K>
struct FieldRoots {
    std::vector<std::pair<K, int>> roots;  // root, multiplicity
    UPoly<K> leftover;                     // monic, no roots in the base field
    bool complete = true;                  // false when the search was capped
};

namespace detail {

inline std::vector<mpz_class> bounded_divisors(mpz_class n, bool& complete) {
    n = abs(n);
    std::vector<mpz_class> divs{1};
    if (n == 0) throw DomainError("divisors of zero");
    mpz_class rest = n;
    std::vector<std::pair<mpz_class, int>> fac;
    for (mpz_class p = 2; p * p <= rest && p < 1000000; p += (p == 2 ? 1 : 2)) {
        if (rest % p == 0) {
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            fac.push_back({p, e});
        }
    }
    if (rest > 1) {
        if (rest < 1000000000000L) {
            fac.push_back({rest, 1});
        } else {
            complete = false;  // unfactored large cofactor: divisor list capped
        }
    }
    for (const auto& [p, e] : fac) {
        std::size_t sz = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > 4096) {
            complete = false;
            break;
        }
    }
    return divs;
}

} // namespace detail

// Rational roots by the rational-root theorem with a divisor cap; the
// `complete` flag reports whether every rational root was provably found.
inline FieldRoots<Rat> field_roots(const UPoly<Rat>& p_in) {
    FieldRoots<Rat> out;
    UPoly<Rat> p = p_in.monic();
    // strip u = 0 first
    int z = 0;
    while (!p.is_zero() && p.coeff(0).is_zero()) {
        p = *UPoly<Rat>::exact_div(p, UPoly<Rat>::t(p.ctx()));
        ++z;
    }
    if (z > 0) out.roots.push_back({Rat(), z});
    if (p.degree() < 1) {
        out.leftover = p;
        return out;
    }
    // clear denominators to Z
    mpz_class den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, c.den());
    std::vector<mpz_class> ic;
    for (const auto& c : p.coeffs()) ic.push_back(c.num() * (den / c.den()));
    mpz_class content = 0;
    for (const auto& c : ic) content = gcd(content, c);
    for (auto& c : ic) c /= content;
    bool complete = true;
    auto ps = detail::bounded_divisors(ic.front(), complete);
    auto qs = detail::bounded_divisors(ic.back(), complete);
    out.complete = complete;
    std::vector<Rat> candidates;
    for (const auto& a : ps)
        for (const auto& b : qs) {
            candidates.push_back(Rat(mpq_class(a, b)));
            candidates.push_back(Rat(mpq_class(-a, b)));
        }
    for (const auto& r : candidates) {
        if (p.degree() < 1) break;
        int mult = 0;
        while (p.degree() >= 1 && p.eval(r).is_zero()) {
            p = p.deflate_root(r);
            ++mult;
        }
        if (mult > 0) out.roots.push_back({r, mult});
    }
    out.leftover = p.monic();
    return out;
}

// Roots over F_p by scanning the field (p is desk-scale small here).
inline FieldRoots<Fp> field_roots(const UPoly<Fp>& p_in) {
    FieldRoots<Fp> out;
    UPoly<Fp> p = p_in.monic();
    long q = UPoly<Fp>::characteristic(p.ctx());
    if (q > 100000) {
        out.leftover = p;
        out.complete = false;
        return out;
    }
    for (long v = 0; v < q && p.degree() >= 1; ++v) {
        Fp r(v, q);
        int mult = 0;
        while (p.degree() >= 1 && p.eval(r).is_zero()) {
            p = p.deflate_root(r);
            ++mult;
        }
        if (mult > 0) out.roots.push_back({r, mult});
    }
    out.leftover = p.monic();
    return out;
}

// Squarefree polynomial with the same root set, valid over Q and over
// prime fields (where p' = 0 means p = q(u)^char with the same roots).
template <class K>
UPoly<K> squarefree_same_roots(UPoly<K> p) {
    p = p.monic();
    if (p.degree() <= 1) return p;
    auto dp = p.derivative();
    if (dp.is_zero()) {
        long ch = UPoly<K>::characteristic(p.ctx());
        if (ch == 0) throw DomainError("zero derivative in characteristic 0");
        std::vector<K> shrunk;
        for (int i = 0; i <= p.degree(); i += static_cast<int>(ch)) shrunk.push_back(p.coeff(i));
        return squarefree_same_roots(UPoly<K>(shrunk, p.ctx()));
    }
    auto d = UPoly<K>::gcd(p, dp);
    if (d.degree() == 0) return p;
    auto w = *UPoly<K>::exact_div(p, d);  // squarefree, the tame roots
    auto rest = squarefree_same_roots(d);
    auto g = UPoly<K>::gcd(w, rest);
    auto extra = *UPoly<K>::exact_div(rest, g);
    return (w * extra).monic();
}

// ---- the family type ---------------------------------------------------

// One-parameter family of pencil points over P^1, held in two affine
// charts with transition u = 1/v.  The charts may be independently
// normalized representatives (they need not be coefficient reversals of
// each other); construction checks they agree as pencil points on the
// overlap.
template <class K>
struct FamilyOverLine {
    int d1, d2;
    BinaryForm<UPoly<K>> FA, GA;  // chart A, finite parameter u
    BinaryForm<UPoly<K>> FB, GB;  // chart B, v = 1/u

    const typename UPoly<K>::Ctx& pctx() const { return FA.ctx(); }
    typename K::Ctx kctx() const { return pctx().base; }
};

namespace detail {

template <class K>
BinaryForm<K> specialize_form(const BinaryForm<UPoly<K>>& f, const K& at, const typename K::Ctx& ctx) {
    return f.template map<K>(ctx, [&](const UPoly<K>& c) { return c.eval(at); });
}

} // namespace detail

// Builds the second chart as the coefficient reversal of the first at
// the given (s,t)-degrees, then validates.
template <class K>
FamilyOverLine<K> family_from_affine(const BinaryForm<UPoly<K>>& fa, const BinaryForm<UPoly<K>>& ga) {
    FamilyOverLine<K> fam;
    fam.d1 = fa.degree();
    fam.d2 = ga.degree();
    fam.FA = fa;
    fam.GA = ga;
    int ef = 0, eg = 0;
    for (int j = 0; j <= fa.degree(); ++j) ef = std::max(ef, fa.coeff(j).degree());
    for (int j = 0; j <= ga.degree(); ++j) eg = std::max(eg, ga.coeff(j).degree());
    fam.FB = fa.template map<UPoly<K>>(fa.ctx(), [&](const UPoly<K>& c) { return c.reverse(ef); });
    fam.GB = ga.template map<UPoly<K>>(ga.ctx(), [&](const UPoly<K>& c) { return c.reverse(eg); });
    validate_family(fam);
    return fam;
}

template <class K>
FamilyOverLine<K> family_from_charts(BinaryForm<UPoly<K>> fa, BinaryForm<UPoly<K>> ga,
                                     BinaryForm<UPoly<K>> fb, BinaryForm<UPoly<K>> gb) {
    FamilyOverLine<K> fam;
    fam.d1 = fa.degree();
    fam.d2 = ga.degree();
    fam.FA = std::move(fa);
    fam.GA = std::move(ga);
    fam.FB = std::move(fb);
    fam.GB = std::move(gb);
    validate_family(fam);
    return fam;
}

// Generic-fiber validity plus overlap consistency of the two charts.
template <class K>
void validate_family(const FamilyOverLine<K>& fam) {
    if (fam.d1 < 1 || fam.d1 >= fam.d2) throw DomainError("family needs 1 <= d1 < d2");
    if (fam.FA.is_zero() || fam.FB.is_zero()) throw DomainError("family with zero F chart");
    // gcd over k(u) constant <=> res_X != 0 in k[u]
    if (resultant(fam.FA, fam.GA).is_zero() || resultant(fam.FB, fam.GB).is_zero())
        throw DomainError("family is generically degenerate (G shares a factor with F)");
    // overlap: same pencil point at a few nonzero parameters
    const auto& kc = fam.kctx();
    int checked = 0;
    for (long v = 1; v <= 8 && checked < 2; ++v) {
        K u0 = K::from_int(v, kc);
        if (u0.is_zero()) continue;  // small characteristic wrap-around
        K v0 = u0.inv();
        auto fa = detail::specialize_form(fam.FA, u0, kc);
        auto ga = detail::specialize_form(fam.GA, u0, kc);
        auto fb = detail::specialize_form(fam.FB, v0, kc);
        auto gb = detail::specialize_form(fam.GB, v0, kc);
        if (fa.is_zero() || fb.is_zero() || divides_form(fa, ga) || divides_form(fb, gb))
            continue;  // a degenerate representative; the certifier handles it
        if (!same_point(PencilPoint<K>(fa, ga), PencilPoint<K>(fb, gb)))
            throw DomainError("chart transition mismatch: not one family");
        ++checked;
    }
}

// ---- the stock families -------------------------------------------------

// t -> [X0^d1 + t X0^(d1-1)X1 + .. + t^d1 X1^d1,
//       X0X1(X0^(d1-1) + .. + t^(d1-1) X1^(d1-1))], d2 = d1+1.
template <class K>
FamilyOverLine<K> explicit_family(int d1, const typename K::Ctx& kc) {
    if (d1 < 1) throw DomainError("explicit_family needs d1 >= 1");
    typename UPoly<K>::Ctx pc{kc, "t"};
    int d2 = d1 + 1;
    BinaryForm<UPoly<K>> fa(d1, pc), ga(d2, pc), fb(d1, pc), gb(d2, pc);
    auto upow = [&](int e) {
        std::vector<K> c(e + 1, K::zero(kc));
        c[e] = K::one(kc);
        return UPoly<K>(c, pc);
    };
    for (int j = 0; j <= d1; ++j) {
        fa.coeff(j) = upow(j);        // t^j at X0^(d1-j) X1^j
        fb.coeff(j) = upow(d1 - j);   // reversal
    }
    for (int j = 1; j <= d1; ++j) {
        ga.coeff(j) = upow(j - 1);
        gb.coeff(j) = upow(d1 - j);
    }
    return family_from_charts(fa, ga, fb, gb);
}

// chart A: [(uX0 + X1)^p, X0^(p d2)]; chart B: [(X0 + vX1)^p, X1^(p d2)].
// Each chart's parameter resultant is a nonzero constant.
inline FamilyOverLine<Fp> frobenius_family(long p, int d2, const Fp::Ctx& kc) {
    if (Fp::characteristic(kc) != p) throw DomainError("frobenius_family needs a base field of characteristic p");
    typename UPoly<Fp>::Ctx pc{kc, "t"};
    int ip = static_cast<int>(p);
    BinaryForm<UPoly<Fp>> fa(ip, pc), ga(ip * d2, pc), fb(ip, pc), gb(ip * d2, pc);
    std::vector<Fp> up(ip + 1, Fp(0, p));
    up[ip] = Fp(1, p);
    // (uX0 + X1)^p = u^p X0^p + X1^p over F_p
    fa.coeff(0) = UPoly<Fp>(up, pc);
    fa.coeff(ip) = UPoly<Fp>::one(pc);
    ga.coeff(0) = UPoly<Fp>::one(pc);  // X0^(p d2)
    // (X0 + vX1)^p = X0^p + v^p X1^p
    fb.coeff(0) = UPoly<Fp>::one(pc);
    fb.coeff(ip) = UPoly<Fp>(up, pc);
    gb.coeff(ip * d2) = UPoly<Fp>::one(pc);  // X1^(p d2)
    return family_from_charts(fa, ga, fb, gb);
}

// ---- DVR normalization ---------------------------------------------------

template <class K>
int form_valuation_at(const BinaryForm<UPoly<K>>& f, const K& r) {
    if (f.is_zero()) throw DomainError("valuation of zero form");
    int v = -1;
    for (int j = 0; j <= f.degree(); ++j) {
        if (f.coeff(j).is_zero()) continue;
        int w = f.coeff(j).valuation_at(r);
        if (v < 0 || w < v) v = w;
    }
    return v;
}

template <class K>
BinaryForm<UPoly<K>> form_deflate_at(const BinaryForm<UPoly<K>>& f, const K& r, int times) {
    auto out = f;
    for (int j = 0; j <= f.degree(); ++j) {
        auto c = out.coeff(j);
        for (int i = 0; i < times && !c.is_zero(); ++i) c = c.deflate_root(r);
        out.coeff(j) = c;
    }
    return out;
}

// The honest limit of the family at parameter r: strip parameter powers
// from F, then repeatedly subtract F-multiples from G and strip again.
// The iteration bound certifies the generic-fiber invariant: exceeding
// it proves G was generically a multiple of F.
template <class K>
PencilPoint<K> normalize_at_chart(BinaryForm<UPoly<K>> F, BinaryForm<UPoly<K>> G, const K& r,
                                  const typename K::Ctx& kc) {
    if (F.is_zero() || G.is_zero()) throw DomainError("normalize_at on a zero chart");
    int bound = 1;
    for (int j = 0; j <= G.degree(); ++j)
        if (!G.coeff(j).is_zero()) bound = std::max(bound, 1 + G.coeff(j).degree());
    F = form_deflate_at(F, r, form_valuation_at(F, r));
    G = form_deflate_at(G, r, form_valuation_at(G, r));
    auto F0 = detail::specialize_form(F, r, kc);
    for (int iter = 0; iter <= bound; ++iter) {
        auto G0 = detail::specialize_form(G, r, kc);
        auto k = BinaryForm<K>::exact_div(G0, F0);
        if (!k) return PencilPoint<K>(F0, G0);
        // lift K to constants of k[u] and reduce
        auto lifted = k->template map<UPoly<K>>(F.ctx(), [&](const K& c) {
            return UPoly<K>::constant(c, F.ctx());
        });
        G = G - lifted * F;
        if (G.is_zero()) throw DomainError("G generically multiple of F");
        G = form_deflate_at(G, r, form_valuation_at(G, r));
    }
    throw DomainError("G generically multiple of F");
}

template <class K>
PencilPoint<K> normalize_at(const FamilyOverLine<K>& fam, const K& r) {
    return normalize_at_chart(fam.FA, fam.GA, r, fam.kctx());
}

template <class K>
PencilPoint<K> normalize_at_infinity(const FamilyOverLine<K>& fam) {
    return normalize_at_chart(fam.FB, fam.GB, K::zero(fam.kctx()), fam.kctx());
}

// ---- certification --------------------------------------------------------

enum class CertStatus { certified, counterexample, inconclusive };

template <class K>
struct CompletenessCertificate {
    CertStatus status = CertStatus::certified;
    UPoly<K> rho_a, rho_b;  // chart resultants
    struct Point {
        std::string chart;
        std::string location;  // a printed root, "infinity", or a modulus
        bool ok;
        std::string gcd_witness;  // for failures
    };
    std::vector<Point> points;
    std::string inconclusive_factor;

    bool certified() const { return status == CertStatus::certified; }
};

namespace detail {

template <class K>
std::string print_limit_witness(const PencilPoint<K>& limit) {
    auto g = gcd_forms(limit.F(), limit.G());
    return g.to_string();
}

// Checks the normalized limit at one base-field root.
template <class K>
void check_root(CompletenessCertificate<K>& cert, const FamilyOverLine<K>& fam,
                const std::string& chart, const K& r) {
    const auto& F = chart == "A" ? fam.FA : fam.FB;
    const auto& G = chart == "A" ? fam.GA : fam.GB;
    auto limit = normalize_at_chart(F, G, r, fam.kctx());
    bool ok = gcd_degree(limit.F(), limit.G()) == 0;
    typename CompletenessCertificate<K>::Point pt;
    pt.chart = chart;
    pt.location = r.to_string();
    pt.ok = ok;
    if (!ok) {
        pt.gcd_witness = print_limit_witness(limit);
        cert.status = CertStatus::counterexample;
    }
    cert.points.push_back(pt);
}

// Dynamic evaluation over k[x]/(h): either every conjugate root checks
// out, or the modulus splits and both factors are handled recursively.
template <class K>
void check_extension_factor(CompletenessCertificate<K>& cert, const FamilyOverLine<K>& fam,
                            const std::string& chart, UPoly<K> h, int ext_bound, int depth = 0) {
    h = h.monic();
    if (h.degree() == 0) return;
    if (depth > 64) throw DomainError("extension splitting runaway");
    if (h.degree() == 1) {
        // linear factor: an honest base-field root
        K r = -h.coeff(0);
        check_root(cert, fam, chart, r);
        return;
    }
    if (ext_bound >= 0 && h.degree() > ext_bound) {
        cert.status = CertStatus::inconclusive;
        cert.inconclusive_factor = h.to_string();
        return;
    }
    using E = Ext<K>;
    auto ectx = E::make_ctx(h, "r");
    typename UPoly<E>::Ctx epc{ectx, "t"};
    auto lift_form = [&](const BinaryForm<UPoly<K>>& f) {
        return f.template map<UPoly<E>>(epc, [&](const UPoly<K>& c) {
            return c.template map<E>(epc, [&](const K& a) { return E::from_base(a, ectx); });
        });
    };
    try {
        auto F = lift_form(chart == "A" ? fam.FA : fam.FB);
        auto G = lift_form(chart == "A" ? fam.GA : fam.GB);
        auto limit = normalize_at_chart<E>(F, G, E::generator(ectx), ectx);
        E res = resultant(limit.F(), limit.G());
        auto g = UPoly<K>::gcd(res.rep(), h);
        if (g.degree() == 0) {
            typename CompletenessCertificate<K>::Point pt;
            pt.chart = chart;
            pt.location = "roots of " + h.to_string();
            pt.ok = true;
            cert.points.push_back(pt);
            return;
        }
        if (g.degree() == h.degree()) {
            // every conjugate limit is degenerate
            typename CompletenessCertificate<K>::Point pt;
            pt.chart = chart;
            pt.location = "roots of " + h.to_string();
            pt.ok = false;
            try {
                pt.gcd_witness = print_limit_witness(limit);
            } catch (const ExtSplit<K>& e) {
                check_extension_factor(cert, fam, chart, e.factor, ext_bound, depth + 1);
                auto co = UPoly<K>::exact_div(h, e.factor);
                if (co) check_extension_factor(cert, fam, chart, *co, ext_bound, depth + 1);
                return;
            }
            cert.status = CertStatus::counterexample;
            cert.points.push_back(pt);
            return;
        }
        // proper split discovered through the resultant
        check_extension_factor(cert, fam, chart, g, ext_bound, depth + 1);
        auto co = UPoly<K>::exact_div(h, g);
        if (co) check_extension_factor(cert, fam, chart, *co, ext_bound, depth + 1);
    } catch (const ExtSplit<K>& e) {
        check_extension_factor(cert, fam, chart, e.factor, ext_bound, depth + 1);
        auto co = UPoly<K>::exact_div(h, e.factor);
        if (co) check_extension_factor(cert, fam, chart, *co, ext_bound, depth + 1);
    }
}

} // namespace detail

// Every parameter where the fiber could leave H_{d1,d2} is a root of
// the chart resultant rho: content vanishing or G in <F> at r forces
// rho(r) = 0.  Chart A covers the finite parameters, chart B only v=0.
template <class K>
CompletenessCertificate<K> certify_complete(const FamilyOverLine<K>& fam, int ext_bound = 8) {
    CompletenessCertificate<K> cert;
    cert.rho_a = resultant(fam.FA, fam.GA);
    cert.rho_b = resultant(fam.FB, fam.GB);

    auto finite = field_roots(cert.rho_a);
    for (const auto& [r, mult] : finite.roots) {
        detail::check_root(cert, fam, "A", r);
        if (cert.status == CertStatus::counterexample) return cert;
    }
    if (finite.leftover.degree() >= 1) {
        auto h = squarefree_same_roots(finite.leftover);
        detail::check_extension_factor(cert, fam, "A", h, ext_bound);
        if (cert.status != CertStatus::certified) return cert;
    }
    if (!finite.complete) {
        cert.status = CertStatus::inconclusive;
        cert.inconclusive_factor = "rational-root search capped";
        return cert;
    }
    // the point at infinity
    if (cert.rho_b.eval(K::zero(fam.kctx())).is_zero()) {
        detail::check_root(cert, fam, "B", K::zero(fam.kctx()));
        if (cert.status == CertStatus::counterexample) return cert;
        // record as infinity for readability
        cert.points.back().location = "infinity";
    }
    return cert;
}

// ---- complete curves of degenerate intersections (d1 = 1, general N) -----

// The pencil of matrices M(s,t) = s M0 + t M1 parametrizes embeddings
// P^(N-1) -> P^N; F is the left-kernel linear form (signed maximal
// minors) and G pushes the fixed hypersurface H forward: G o M = scale*H.
template <class K>
struct EmbeddingFamily {
    int n;                              // N
    int d2;
    MultiForm<K> H;                     // degree-d2 form in N variables
    Mat<K> M0, M1;                      // (N+1) x N
    std::vector<BinaryForm<K>> minors;  // m_i(s,t), degree-N binary forms
    MultiForm<UPoly<K>> F;              // chart A: sum m_i(u) X_i
    MultiForm<UPoly<K>> G;              // chart A: solved pushforward
    UPoly<K> scale;                     // G o M = scale * H over k[u]
};

namespace detail {

template <class K>
Mat<UPoly<K>> matrix_chart_a(const Mat<K>& m0, const Mat<K>& m1, const typename UPoly<K>::Ctx& pc) {
    Mat<UPoly<K>> m(m0.rows(), m0.cols(), pc);
    auto t = UPoly<K>::t(pc);
    for (int i = 0; i < m0.rows(); ++i)
        for (int j = 0; j < m0.cols(); ++j)
            m(i, j) = UPoly<K>::constant(m0(i, j), pc) + t * UPoly<K>::constant(m1(i, j), pc);
    return m;
}

} // namespace detail

// Signed maximal minors of sM0 + tM1, as degree-N binary forms in (s,t).
template <class K>
std::vector<BinaryForm<K>> signed_minor_vector(const Mat<K>& m0, const Mat<K>& m1) {
    int n = m0.cols();
    typename UPoly<K>::Ctx pc{m0.ctx(), "t"};
    auto ma = detail::matrix_chart_a(m0, m1, pc);
    std::vector<BinaryForm<K>> out;
    for (int drop = 0; drop <= n; ++drop) {
        Mat<UPoly<K>> sub(n, n, pc);
        int rr = 0;
        for (int i = 0; i <= n; ++i) {
            if (i == drop) continue;
            for (int j = 0; j < n; ++j) sub(rr, j) = ma(i, j);
            ++rr;
        }
        UPoly<K> d = det_bareiss(sub);
        if (drop % 2 == 1) d = -d;
        out.push_back(BinaryForm<K>::homogenize(d, n, m0.ctx()));
    }
    return out;
}

// Is the base field form squarefree?  Via resultant of the two partial
// derivatives (a common root of both is a repeated root of H).
template <class K>
bool binary_form_squarefree(const BinaryForm<K>& h) {
    if (h.degree() <= 1) return true;
    return !resultant(h.d_x0(), h.d_x1()).is_zero();
}

template <class K>
EmbeddingFamily<K> embedding_family(int n, int d2, const MultiForm<K>& h, const Mat<K>& m0,
                                    const Mat<K>& m1) {
    if (h.nvars() != n || h.degree() != d2 || h.is_zero())
        throw DomainError("embedding_family needs a nonzero degree-d2 form in N variables");
    if (m0.rows() != n + 1 || m0.cols() != n || m1.rows() != n + 1 || m1.cols() != n)
        throw DomainError("embedding_family needs (N+1) x N matrices");
    if (n == 2) {
        BinaryForm<K> hb(d2, h.ctx());
        for (int j = 0; j <= d2; ++j) hb.coeff(j) = h.coeff({d2 - j, j});
        if (!binary_form_squarefree(hb)) throw DomainError("H is not squarefree");
    }
    EmbeddingFamily<K> fam;
    fam.n = n;
    fam.d2 = d2;
    fam.H = h;
    fam.M0 = m0;
    fam.M1 = m1;
    fam.minors = signed_minor_vector(m0, m1);
    // the rank-drop locus must be empty: the minor gcd must be constant
    BinaryForm<K> g = BinaryForm<K>::zero(0, h.ctx());
    bool have = false;
    for (const auto& m : fam.minors) {
        if (m.is_zero()) continue;
        g = have ? gcd_forms(g, m) : gcd_forms(m, m);
        have = true;
    }
    if (!have || g.degree() >= 1)
        throw DomainError("minor gcd nonconstant; common root witness: " +
                          (have ? g.to_string() : std::string("all minors vanish")));

    typename UPoly<K>::Ctx pc{h.ctx(), "t"};
    // F = sum_i m_i(u) X_i
    fam.F = MultiForm<UPoly<K>>(n + 1, 1, pc);
    for (int i = 0; i <= n; ++i) {
        std::vector<int> e(n + 1, 0);
        e[i] = 1;
        fam.F.set_coeff(e, fam.minors[i].dehomogenize());
    }
    // left-kernel identity m . M = 0, exactly
    auto ma = detail::matrix_chart_a(m0, m1, pc);
    for (int j = 0; j < n; ++j) {
        UPoly<K> acc = UPoly<K>::zero(pc);
        for (int i = 0; i <= n; ++i) acc += fam.minors[i].dehomogenize() * ma(i, j);
        if (!acc.is_zero()) throw DomainError("minor vector is not a left kernel");
    }

    // solve G over k(u): G(M(u) Y) = H(Y), unknown coefficients of G
    using R = RatFunc<K>;
    typename R::Ctx rc = pc;
    std::vector<MultiForm<R>> images;  // X_i -> sum_j M(u)_{ij} Y_j
    for (int i = 0; i <= n; ++i) {
        MultiForm<R> li(n, 1, rc);
        for (int j = 0; j < n; ++j) {
            std::vector<int> e(n, 0);
            e[j] = 1;
            li.set_coeff(e, R(ma(i, j)));
        }
        images.push_back(li);
    }
    auto gmonos = monomials_of_degree(n + 1, d2);
    auto ymonos = monomials_of_degree(n, d2);
    Mat<R> sys(static_cast<int>(ymonos.size()), static_cast<int>(gmonos.size()), rc);
    for (std::size_t col = 0; col < gmonos.size(); ++col) {
        MultiForm<R> comp = MultiForm<R>::monomial(n, std::vector<int>(n, 0), R::one(rc), rc);
        for (int i = 0; i <= n; ++i)
            for (int e = 0; e < gmonos[col][i]; ++e) comp = comp * images[i];
        for (std::size_t row = 0; row < ymonos.size(); ++row)
            sys(static_cast<int>(row), static_cast<int>(col)) = comp.coeff(ymonos[row]);
    }
    std::vector<R> rhs;
    for (const auto& ym : ymonos) rhs.push_back(R(UPoly<K>::constant(h.coeff(ym), pc)));
    auto sol = solve(sys, rhs);
    if (!sol) throw DomainError("pushforward system inconsistent (matrix pencil degenerate?)");
    // clear denominators and strip content
    UPoly<K> den = UPoly<K>::one(pc);
    for (const auto& v : *sol) {
        auto gmd = UPoly<K>::gcd(den, v.den());
        den = *UPoly<K>::exact_div(den * v.den(), gmd);
    }
    std::vector<UPoly<K>> coeffs;
    for (const auto& v : *sol)
        coeffs.push_back(v.num() * *UPoly<K>::exact_div(den, v.den()));
    UPoly<K> content = UPoly<K>::zero(pc);
    for (const auto& c : coeffs) content = UPoly<K>::gcd(content, c);
    fam.G = MultiForm<UPoly<K>>(n + 1, d2, pc);
    for (std::size_t col = 0; col < gmonos.size(); ++col) {
        if (coeffs[col].is_zero()) continue;
        fam.G.set_coeff(gmonos[col], *UPoly<K>::exact_div(coeffs[col], content));
    }

    // exact identity G o M = scale * H over k[u]
    std::vector<MultiForm<UPoly<K>>> pimages;
    for (int i = 0; i <= n; ++i) {
        MultiForm<UPoly<K>> li(n, 1, pc);
        for (int j = 0; j < n; ++j) {
            std::vector<int> e(n, 0);
            e[j] = 1;
            li.set_coeff(e, ma(i, j));
        }
        pimages.push_back(li);
    }
    auto pushed = fam.G.compose(pimages);
    std::optional<UPoly<K>> scale;
    for (const auto& ym : ymonos) {
        auto hv = h.coeff(ym);
        auto pv = pushed.coeff(ym);
        if (hv.is_zero()) {
            if (!pv.is_zero()) throw DomainError("pushforward does not match H");
            continue;
        }
        auto c = UPoly<K>::exact_div(pv, UPoly<K>::constant(hv, pc));
        if (!c) throw DomainError("pushforward scale is not polynomial");
        if (!scale) scale = c;
        else if (!(*scale == *c)) throw DomainError("pushforward does not match H");
    }
    if (!scale || scale->is_zero()) throw DomainError("pushforward collapsed");
    fam.scale = *scale;
    return fam;
}

// Fiberwise verification report for an embedding family.
template <class K>
struct EmbeddingFiberCheck {
    bool rank_full = false;       // rank M(u0) = N
    bool identity = false;        // G(u0) o M(u0) = scale(u0) H, nonzero
    bool pencil_valid = false;    // [F(u0), G(u0)] is an honest pencil point
};

template <class K>
EmbeddingFiberCheck<K> check_embedding_fiber(const EmbeddingFamily<K>& fam, const K& u0) {
    EmbeddingFiberCheck<K> out;
    const auto& kc = fam.H.ctx();
    Mat<K> m(fam.n + 1, fam.n, kc);
    for (int i = 0; i <= fam.n; ++i)
        for (int j = 0; j < fam.n; ++j) m(i, j) = fam.M0(i, j) + u0 * fam.M1(i, j);
    out.rank_full = rank_of(m) == fam.n;
    auto spec = [&](const MultiForm<UPoly<K>>& f) {
        MultiForm<K> g(f.nvars(), f.degree(), kc);
        for (const auto& [mono, c] : f.terms()) g.set_coeff(mono, c.eval(u0));
        return g;
    };
    auto f0 = spec(fam.F);
    auto g0 = spec(fam.G);
    std::vector<MultiForm<K>> images;
    for (int i = 0; i <= fam.n; ++i) {
        MultiForm<K> li(fam.n, 1, kc);
        for (int j = 0; j < fam.n; ++j) {
            std::vector<int> e(fam.n, 0);
            e[j] = 1;
            li.set_coeff(e, m(i, j));
        }
        images.push_back(li);
    }
    auto pushed = g0.compose(images);
    K c0 = fam.scale.eval(u0);
    out.identity = !c0.is_zero() && pushed == fam.H * c0;
    out.pencil_valid = !f0.is_zero() && !g0.is_zero() && !pushed.is_zero();
    return out;
}

} // namespace ci2

#endif
