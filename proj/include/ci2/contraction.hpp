#ifndef CI2_CONTRACTION_HPP
#define CI2_CONTRACTION_HPP

#include <utility>
#include <vector>

#include "ci2/multi_form.hpp"

namespace ci2 {

// A pencil point [F, G] with F, G forms on P^N; same equivalence as the
// binary case.  Validity of "G not a multiple of F" is decided through
// the leading reduction in some frame.
template <class K>
class MultiPencil {
public:
    MultiPencil(MultiForm<K> f, MultiForm<K> g) : f_(std::move(f)), g_(std::move(g)) {
        if (f_.nvars() != g_.nvars()) throw DomainError("pencil variable mismatch");
        if (f_.degree() < 1 || f_.degree() >= g_.degree())
            throw DomainError("pencil needs 1 <= d1 < d2");
        if (f_.is_zero()) throw DomainError("pencil with zero F");
    }

    int nvars() const { return f_.nvars(); }
    int d1() const { return f_.degree(); }
    int d2() const { return g_.degree(); }
    const MultiForm<K>& F() const { return f_; }
    const MultiForm<K>& G() const { return g_; }
    const typename K::Ctx& ctx() const { return f_.ctx(); }

private:
    MultiForm<K> f_, g_;
};

template <class K>
bool frame_valid_for_multi(const MultiForm<K>& f, const Mat<K>& frame) {
    std::vector<K> col;
    for (int i = 0; i < f.nvars(); ++i) col.push_back(frame(i, 0));
    return !f.eval(col).is_zero();
}

// Searches permutation-like candidates, then random unimodular frames.
template <class K>
Mat<K> find_multi_frame(const MultiForm<K>& f, Rng& rng, int tries = 200) {
    int n = f.nvars();
    for (int i = 0; i < n; ++i) {
        Mat<K> a = Mat<K>::identity(n, f.ctx());
        a.swap_rows(0, i);
        if (frame_valid_for_multi(f, a)) return a;
    }
    for (int s = 0; s < tries; ++s) {
        auto a = random_unimodular_frame<K>(n, f.ctx(), rng);
        if (frame_valid_for_multi(f, a)) return a;
    }
    throw FrameError("no sampled frame makes F's leading coefficient nonzero");
}

template <class K>
struct LeadingReduction {
    K scale;          // (X0^d1 coefficient of F in the frame)^(d2-d1+1)
    MultiForm<K> q;   // scale * G' = q * F' + r in frame coordinates
    MultiForm<K> r;   // no monomial of r divisible by X0^d1
};

// Formal Euclidean division of G by F: eliminate every monomial whose
// X0-exponent reaches d1, fraction-free, one multiplication by the
// leading coefficient per X0-level from d2 down to d1.
template <class K>
LeadingReduction<K> leading_reduction(const MultiForm<K>& f, const MultiForm<K>& g,
                                      const Mat<K>& frame) {
    int n = f.nvars(), d1 = f.degree(), d2 = g.degree();
    const auto& ctx = f.ctx();
    MultiForm<K> ff = f.transform(frame);
    MultiForm<K> r = g.transform(frame);
    typename MultiForm<K>::Mono lead(n, 0);
    lead[0] = d1;
    K f0 = ff.coeff(lead);
    if (f0.is_zero()) throw FrameError("frame invalid for F");
    MultiForm<K> q(n, d2 - d1, ctx);
    K scale = K::one(ctx);
    for (int level = d2; level >= d1; --level) {
        // pre-scaling coefficients of the level to eliminate: after the
        // multiplication by f0 they cancel exactly against c * (m/X0^d1) * F'
        std::vector<std::pair<typename MultiForm<K>::Mono, K>> batch;
        for (const auto& [m, c] : r.terms())
            if (m[0] == level) batch.push_back({m, c});
        scale = scale * f0;
        q = q * f0;
        r = r * f0;
        for (const auto& [m, c] : batch) {
            typename MultiForm<K>::Mono quot = m;
            quot[0] -= d1;
            auto qterm = MultiForm<K>::monomial(n, quot, c, ctx);
            q = q + qterm;
            r = r - qterm * ff;
        }
    }
    return {scale, q, r};
}

// Concatenated coefficient vectors of the reductions across frames,
// all computed from the one fixed representative (F, G).
template <class K>
struct SigmaVector {
    std::vector<Mat<K>> frames;
    std::vector<std::vector<K>> blocks;  // per frame: coefficients of R over M_{d2}
    std::vector<K> flat;
    bool is_zero() const {
        for (const auto& v : flat)
            if (!v.is_zero()) return false;
        return true;
    }
};

template <class K>
SigmaVector<K> sigma_vector(const MultiPencil<K>& x, const std::vector<Mat<K>>& frames) {
    SigmaVector<K> out;
    out.frames = frames;
    auto monos = monomials_of_degree(x.nvars(), x.d2());
    for (const auto& fr : frames) {
        auto red = leading_reduction(x.F(), x.G(), fr);
        std::vector<K> block;
        block.reserve(monos.size());
        for (const auto& m : monos) block.push_back(red.r.coeff(m));
        out.blocks.push_back(block);
        out.flat.insert(out.flat.end(), block.begin(), block.end());
    }
    return out;
}

template <class K>
std::vector<Mat<K>> default_frames(const MultiPencil<K>& x, Rng& rng, int count = -1) {
    int n = x.nvars();
    if (count < 0) count = 2 * n;  // default 2(N+1)
    std::vector<Mat<K>> frames;
    for (int tries = 0; tries < 100 * count && static_cast<int>(frames.size()) < count; ++tries) {
        auto a = tries == 0 ? Mat<K>::identity(n, x.ctx()) : random_unimodular_frame<K>(n, x.ctx(), rng);
        if (frame_valid_for_multi(x.F(), a)) frames.push_back(a);
    }
    if (static_cast<int>(frames.size()) < count)
        throw FrameError("could not collect enough valid frames");
    return frames;
}

// Shared-frame validity for a pair of points.
template <class K>
std::vector<Mat<K>> shared_frames(const MultiPencil<K>& x, const MultiPencil<K>& y, Rng& rng,
                                  int count = -1) {
    int n = x.nvars();
    if (count < 0) count = 2 * n;
    std::vector<Mat<K>> frames;
    for (int tries = 0; tries < 200 * count && static_cast<int>(frames.size()) < count; ++tries) {
        auto a = tries == 0 ? Mat<K>::identity(n, x.ctx()) : random_unimodular_frame<K>(n, x.ctx(), rng);
        if (frame_valid_for_multi(x.F(), a) && frame_valid_for_multi(y.F(), a)) frames.push_back(a);
    }
    if (static_cast<int>(frames.size()) < count)
        throw FrameError("could not collect enough shared frames");
    return frames;
}

// True iff the sigma vectors are projectively equal; on the contracted
// locus this detects equality of images under the first contraction.
template <class K>
bool fiber_probe(const MultiPencil<K>& x, const MultiPencil<K>& y, const std::vector<Mat<K>>& frames) {
    auto vx = sigma_vector(x, frames);
    auto vy = sigma_vector(y, frames);
    if (vx.flat.size() != vy.flat.size()) return false;
    std::size_t j0 = vx.flat.size();
    for (std::size_t j = 0; j < vx.flat.size(); ++j)
        if (!vx.flat[j].is_zero() || !vy.flat[j].is_zero()) { j0 = j; break; }
    if (j0 == vx.flat.size()) return true;
    if (vx.flat[j0].is_zero() || vy.flat[j0].is_zero()) return false;
    for (std::size_t j = 0; j < vx.flat.size(); ++j)
        if (vx.flat[j] * vy.flat[j0] != vy.flat[j] * vx.flat[j0]) return false;
    return true;
}

} // namespace ci2

#endif
