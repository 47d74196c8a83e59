#ifndef CI2_HILBERT_HPP
#define CI2_HILBERT_HPP

#include <string>
#include <utility>
#include <vector>

#include "ci2/linalg.hpp"
#include "ci2/pencil.hpp"

namespace ci2 {

// Hilbert function of a complete-intersection point of H_{d1,d2}.
// Convention: dimension of the space of degree-l EQUATIONS (not of the
// quotient, which is what the multigraded Hilbert scheme literature
// counts).
inline long hf_closed_form(int d1, int d2, int l) {
    if (d1 < 1 || d2 <= d1) throw DomainError("hf_closed_form needs 1 <= d1 < d2");
    if (l < 0) throw DomainError("negative degree");
    if (l <= d1 - 1) return 0;
    if (l <= d2 - 1) return l - d1 + 1;
    if (l <= d1 + d2 - 1) return 2L * l - d1 - d2 + 2;
    return l + 1;
}

// Degreewise basis matrices of a graded ideal in k[X0,X1], stored for
// 0 <= l <= bound.  Rows are coefficient vectors in S_l; every piece is
// kept in RREF, so equality of ideals is equality of matrices.
template <class K>
struct GradedIdeal {
    int d1 = 0, d2 = 0;
    int bound = 0;
    std::vector<Mat<K>> pieces;

    long dim(int l) const { return pieces[l].rows(); }

    bool operator==(const GradedIdeal& o) const {
        return d1 == o.d1 && d2 == o.d2 && bound == o.bound && pieces == o.pieces;
    }

    // ideal closure: span(X0 I_l, X1 I_l) inside I_{l+1}, testable by rank
    bool closed_under_multiplication() const {
        for (int l = 0; l + 1 <= bound; ++l) {
            const Mat<K>& cur = pieces[l];
            const Mat<K>& next = pieces[l + 1];
            if (cur.rows() == 0) continue;
            Mat<K> stacked = next;
            for (int r = 0; r < cur.rows(); ++r) {
                std::vector<K> x0row(l + 2, K::zero(next.ctx()));
                std::vector<K> x1row(l + 2, K::zero(next.ctx()));
                for (int j = 0; j <= l; ++j) {
                    x0row[j] = cur(r, j);       // X0 * X0^(l-j)X1^j
                    x1row[j + 1] = cur(r, j);   // X1 * X0^(l-j)X1^j
                }
                stacked.append_row(x0row);
                stacked.append_row(x1row);
            }
            if (rank_of(stacked) != next.rows()) return false;
        }
        return true;
    }

    bool has_hilbert_function_hf() const {
        for (int l = 0; l <= bound; ++l)
            if (dim(l) != hf_closed_form(d1, d2, l)) return false;
        return true;
    }
};

template <class K>
std::vector<K> form_row(const BinaryForm<K>& f, int l) {
    if (f.degree() != l) throw DomainError("row degree mismatch");
    return f.coeffs();
}

template <class K>
BinaryForm<K> row_form(const Mat<K>& m, int r, const typename K::Ctx& ctx) {
    return BinaryForm<K>(m.cols() - 1, m.row(r), ctx);
}

// Basis of { A F + B G : A in S_{l-d1}, B in S_{l-d2} } by exact row
// reduction; dimension equals hf_closed_form iff gcd(F,G) = 1.
template <class K>
Mat<K> ideal_piece(const BinaryForm<K>& f, const BinaryForm<K>& g, int l) {
    const auto& ctx = f.ctx();
    Mat<K> rows(0, l + 1, ctx);
    auto push_multiples = [&](const BinaryForm<K>& h) {
        int d = h.degree();
        if (l < d) return;
        for (int i = 0; i + d <= l; ++i) {
            // X0^(l-d-i) X1^i * h
            std::vector<K> row(l + 1, K::zero(ctx));
            for (int j = 0; j <= d; ++j) row[i + j] = h.coeff(j);
            rows.append_row(row);
        }
    };
    push_multiples(f);
    push_multiples(g);
    return row_basis(rows);
}

// Same, for the ideal generated by a list of forms.
template <class K>
Mat<K> ideal_piece_many(const std::vector<BinaryForm<K>>& gens, int l, const typename K::Ctx& ctx) {
    Mat<K> rows(0, l + 1, ctx);
    for (const auto& h : gens) {
        int d = h.degree();
        if (h.is_zero() || l < d) continue;
        for (int i = 0; i + d <= l; ++i) {
            std::vector<K> row(l + 1, K::zero(ctx));
            for (int j = 0; j <= d; ++j) row[i + j] = h.coeff(j);
            rows.append_row(row);
        }
    }
    return row_basis(rows);
}

// The graded ideal of an interior point [F,G], up to the stored bound.
template <class K>
GradedIdeal<K> interior_ideal(const PencilPoint<K>& x, int bound = -1) {
    GradedIdeal<K> I;
    I.d1 = x.d1();
    I.d2 = x.d2();
    I.bound = bound >= 0 ? bound : x.d1() + x.d2() + 2;
    for (int l = 0; l <= I.bound; ++l) I.pieces.push_back(ideal_piece(x.F(), x.G(), l));
    return I;
}

// Boundary point e_k(Z, W): equations F_Z * (ideal of W) in degrees
// < d2+k, equations of Z from degree d2+k on.  Smooth-point inputs only:
// both pairs coprime.
template <class K>
GradedIdeal<K> boundary_ideal(int k, const PencilPoint<K>& z, const PencilPoint<K>& w,
                              int d1, int d2, int bound = -1) {
    if (k < 1 || k > d1 - 1) throw DomainError("boundary index k out of range");
    if (z.d1() != d1 - k || z.d2() != d2 + k) throw DomainError("Z degrees must be (d1-k, d2+k)");
    if (w.d1() != k || w.d2() != d2 - d1 + k) throw DomainError("W degrees must be (k, d2-d1+k)");
    if (gcd_degree(z.F(), z.G()) != 0) throw DomainError("Z is not a smooth point (common factor)");
    if (gcd_degree(w.F(), w.G()) != 0) throw DomainError("W is not a smooth point (common factor)");
    const auto& ctx = z.ctx();
    GradedIdeal<K> I;
    I.d1 = d1;
    I.d2 = d2;
    I.bound = bound >= 0 ? bound : d1 + d2 + 2;
    int fz_deg = d1 - k;
    for (int l = 0; l <= I.bound; ++l) {
        if (l < d2 + k) {
            // F_Z * (ideal of W)_{l - deg F_Z}
            Mat<K> rows(0, l + 1, ctx);
            if (l >= fz_deg) {
                Mat<K> wpiece = ideal_piece(w.F(), w.G(), l - fz_deg);
                for (int r = 0; r < wpiece.rows(); ++r) {
                    auto wform = row_form(wpiece, r, ctx);
                    rows.append_row(form_row(z.F() * wform, l));
                }
            }
            I.pieces.push_back(row_basis(rows));
        } else {
            I.pieces.push_back(ideal_piece(z.F(), z.G(), l));
        }
    }
    return I;
}

// Recovered constituents of a boundary point.
template <class K>
struct BoundaryRecovery {
    int k = 0;
    BinaryForm<K> f_z;                  // up to scale
    std::vector<Mat<K>> w_pieces;       // ideal of W, degrees 0..bound-(d1-k)
    std::vector<Mat<K>> z_high_pieces;  // equations of Z, degrees d2+k..bound
};

// Inverts boundary_ideal on its image: F_Z is the gcd of the equations
// of degree < d2+k, the W-equations are their quotients by F_Z, and the
// high-degree equations are Z's.
template <class K>
BoundaryRecovery<K> recover_from_boundary(const GradedIdeal<K>& I, const typename K::Ctx& ctx) {
    int d1 = I.d1, d2 = I.d2;
    // cumulative gcd of all equations of degree <= l, walked upward; the
    // last l where it stays nontrivial is d2+k-1
    BinaryForm<K> cum = BinaryForm<K>::zero(0, ctx);
    bool have = false;
    int last_nontrivial = -1;
    BinaryForm<K> best = cum;
    for (int l = 0; l <= I.bound; ++l) {
        for (int r = 0; r < I.pieces[l].rows(); ++r) {
            auto f = row_form(I.pieces[l], r, ctx);
            if (f.is_zero()) continue;
            cum = have ? gcd_forms(cum, f) : f;
            have = true;
        }
        if (have && cum.degree() >= 1) {
            last_nontrivial = l;
            best = cum;
        }
    }
    if (last_nontrivial < 0) throw NotBoundaryPoint("not a boundary point of type e_k");
    int k = last_nontrivial - d2 + 1;
    if (k < 1 || k > d1 - 1) throw NotBoundaryPoint("not a boundary point of type e_k");
    if (best.degree() != d1 - k) throw NotBoundaryPoint("low-degree gcd has the wrong degree");

    BoundaryRecovery<K> out;
    out.k = k;
    out.f_z = best;
    for (int l = 0; l < d2 + k && l <= I.bound; ++l) {
        int m = l - (d1 - k);
        if (m < 0) {
            if (I.pieces[l].rows() != 0) throw NotBoundaryPoint("equations below deg F_Z");
            continue;
        }
        Mat<K> rows(0, m + 1, ctx);
        for (int r = 0; r < I.pieces[l].rows(); ++r) {
            auto f = row_form(I.pieces[l], r, ctx);
            auto q = BinaryForm<K>::exact_div(f, best);
            if (!q) throw NotBoundaryPoint("low-degree equation not divisible by the gcd");
            rows.append_row(form_row(*q, m));
        }
        out.w_pieces.push_back(row_basis(rows));
    }
    for (int l = d2 + k; l <= I.bound; ++l) out.z_high_pieces.push_back(I.pieces[l]);
    return out;
}

} // namespace ci2

namespace ci2 {

// Kernel dimension of (A,B) |-> A*PL + B*PH on S_{l-d1} x S_{l-d2};
// equals max(0, l-d2-k+1) when gcd(L,H) = 1 (asserted by the caller's
// tests, not here).
template <class K>
long multexc_kernel_dim(const BinaryForm<K>& p, const BinaryForm<K>& l_form,
                        const BinaryForm<K>& h_form, int l, int k, int d1, int d2) {
    if (p.degree() != d1 - k || l_form.degree() != k || h_form.degree() != d2 - d1 + k)
        throw DomainError("multexc degree mismatch");
    if (p.is_zero()) throw DomainError("multexc needs P nonzero");
    if (l < d2 || l > d1 + d2 - 1) throw DomainError("multexc degree range is d2 <= l <= d1+d2-1");
    if (gcd_degree(l_form, h_form) != 0) throw DomainError("multexc needs gcd(L,H) = 1");
    const auto& ctx = p.ctx();
    auto pl = p * l_form;
    auto ph = p * h_form;
    int na = l - d1 + 1, nb = l - d2 + 1;
    // columns: the unknown coefficients of A then B; rows: coefficients in S_l
    Mat<K> m(l + 1, na + nb, ctx);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j <= d1; ++j) m(i + j, i) += pl.coeff(j);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j <= d2; ++j) m(i + j, na + i) += ph.coeff(j);
    return na + nb - rank_of(m);
}

} // namespace ci2

#endif
