#ifndef CI2_TESTS_ORACLES_HPP
#define CI2_TESTS_ORACLES_HPP

// Independent oracles used by the test suites.  These deliberately take
// different computational routes than the library: cofactor expansion
// instead of Bareiss, dense linear solves instead of synthetic division.

#include "ci2/euclid.hpp"
#include "ci2/linalg.hpp"
#include "ci2/pencil.hpp"
#include "ci2/resultant.hpp"

namespace ci2::oracles {

// Determinant by cofactor expansion along the first row; exponential,
// fine for the Sylvester sizes exercised in tests.
template <class K>
K det_cofactor(const Mat<K>& m) {
    int n = m.rows();
    if (n == 0) return K::one(m.ctx());
    if (n == 1) return m(0, 0);
    K acc = K::zero(m.ctx());
    for (int j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        Mat<K> sub(n - 1, n - 1, m.ctx());
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(i - 1, cc++) = m(i, c);
            }
        }
        K term = m(0, j) * det_cofactor(sub);
        if (j % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

template <class K>
K resultant_oracle(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    return det_cofactor(sylvester_matrix(f, g));
}

// Solves for (Q, R) in  scale * A = B*Q + L^e * R  as a dense linear
// system in the coefficients of Q (deg a-b) and R (deg b-1), and
// demands the solution be unique.  Field coefficients.
template <class K>
std::pair<BinaryForm<K>, BinaryForm<K>> anchored_division_oracle(const BinaryForm<K>& A,
                                                                 const BinaryForm<K>& B,
                                                                 const K& lambda, const K& mu) {
    static_assert(K::is_field);
    int a = A.degree(), b = B.degree(), e = a - b + 1;
    const auto& ctx = A.ctx();
    K bval = B.eval(lambda, mu);
    K scale = K::one(ctx);
    for (int i = 0; i < e; ++i) scale = scale * bval;
    BinaryForm<K> lpow = BinaryForm<K>::monomial(0, 0, K::one(ctx), ctx);
    auto L = BinaryForm<K>::anchor_line(lambda, mu, ctx);
    for (int i = 0; i < e; ++i) lpow = lpow * L;

    int nq = a - b + 1, nr = b;  // unknown counts
    Mat<K> sys(a + 1, nq + nr, ctx);
    for (int qj = 0; qj < nq; ++qj) {
        // column: coefficients of X0^(a-b-qj) X1^qj * B
        for (int i = 0; i <= b; ++i) sys(qj + i, qj) += B.coeff(i);
    }
    for (int rj = 0; rj < nr; ++rj) {
        for (int i = 0; i <= e; ++i) sys(rj + i, nq + rj) += lpow.coeff(i);
    }
    std::vector<K> rhs;
    for (int i = 0; i <= a; ++i) rhs.push_back(A.coeff(i) * scale);
    // uniqueness: the (a+1) x (a+1) system must be invertible
    if (rank_of(sys) != a + 1) throw DomainError("oracle system is singular");
    auto sol = solve(sys, rhs);
    if (!sol) throw DomainError("oracle system inconsistent");
    BinaryForm<K> q(a - b, ctx), r(b - 1, ctx);
    for (int j = 0; j < nq; ++j) q.coeff(j) = (*sol)[j];
    for (int j = 0; j < nr; ++j) r.coeff(j) = (*sol)[nq + j];
    return {q, r};
}

// Remainder sequence computed purely through the linear-solve oracle,
// cofactor divisions included.
template <class K>
std::vector<BinaryForm<K>> sequence_oracle(const PencilPoint<K>& x, const AnchorList<K>& anchors) {
    static_assert(K::is_field);
    int d1 = x.d1(), d2 = x.d2();
    const auto& ctx = x.ctx();
    std::vector<BinaryForm<K>> R;
    auto [q0, r0] = anchored_division_oracle(x.G(), x.F(), anchors.lambda(0), anchors.mu(0));
    (void)q0;
    R.push_back(r0);
    K f0 = x.F().eval(anchors.lambda(0), anchors.mu(0));
    K f0e = K::one(ctx);
    for (int i = 0; i < d2 - d1 + 1; ++i) f0e = f0e * f0;
    for (int i = 1; i <= d1 - 1; ++i) {
        const auto& prev = R[i - 1];
        const auto& prev2 = i >= 2 ? R[i - 2] : x.F();
        if (prev.is_zero()) {
            R.push_back(BinaryForm<K>::zero(d1 - 1 - i, ctx));
            continue;
        }
        auto [qt, rt] = anchored_division_oracle(prev2, prev, anchors.lambda(i), anchors.mu(i));
        (void)qt;
        K cof = f0e;
        if (i >= 2) {
            K c = prev2.eval(anchors.lambda(i - 1), anchors.mu(i - 1));
            cof = c * c;
        }
        R.push_back(rt * cof.inv());
    }
    return R;
}

// deg gcd via rank deficiency of the Sylvester matrix.
template <class K>
int gcd_degree_oracle(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    return gcd_degree_by_sylvester_rank(f, g);
}

// Rank by fraction-free triangularization (different path than rref).
template <class K>
int rank_oracle(Mat<K> m) {
    int rank = 0;
    K prev = K::one(m.ctx());
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        m.swap_rows(row, pivot);
        for (int i = row + 1; i < m.rows(); ++i)
            for (int j = col + 1; j < m.cols(); ++j) {
                K num = m(i, j) * m(row, col) - m(i, col) * m(row, j);
                auto q = K::exact_div(num, prev);
                m(i, j) = q ? *q : num;  // over a field prev is invertible
            }
        for (int i = row + 1; i < m.rows(); ++i) m(i, col) = K::zero(m.ctx());
        prev = m(row, col);
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace ci2::oracles

#endif
