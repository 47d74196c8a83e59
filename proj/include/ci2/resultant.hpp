#ifndef CI2_RESULTANT_HPP
#define CI2_RESULTANT_HPP

#include "ci2/binary_form.hpp"
#include "ci2/linalg.hpp"

namespace ci2 {

// Sylvester matrix of (F, G), F-rows first: deg(G) rows of F
// coefficients, then deg(F) rows of G coefficients.  This orientation
// is the project-wide sign convention; every identity involving
// resultant signs is stated against it.
template <class K>
Mat<K> sylvester_matrix(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    int d1 = f.degree(), d2 = g.degree();
    int n = d1 + d2;
    Mat<K> m(n, n, f.ctx());
    for (int r = 0; r < d2; ++r)
        for (int j = 0; j <= d1; ++j) m(r, r + j) = f.coeff(j);
    for (int r = 0; r < d1; ++r)
        for (int j = 0; j <= d2; ++j) m(d2 + r, r + j) = g.coeff(j);
    return m;
}

// Resultant by fraction-free elimination, so it is computed without
// fractions over k[t], multivariate coefficient rings, and any other
// integral domain.  Zero iff F and G share a projective root over the
// algebraic closure.
template <class K>
K resultant(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("undefined resultant operand");
    return det_bareiss(sylvester_matrix(f, g));
}

// deg gcd(F,G) = d1 + d2 - rank(Sylvester); used as an independent
// cross-check of the Euclidean gcd (field coefficients only).
template <class K>
int gcd_degree_by_sylvester_rank(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    static_assert(K::is_field, "rank route needs a field");
    return f.degree() + g.degree() - rank_of(sylvester_matrix(f, g));
}

} // namespace ci2

#endif
