#ifndef CI2_GIT_HPP
#define CI2_GIT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ci2/multi_form.hpp"
#include "ci2/rational.hpp"

namespace ci2 {

// Diagonal one-parameter subgroup of SL_N: ordered integer weights
// summing to zero, acting in the given basis of the N-dimensional space.
template <class K>
struct OnePS {
    std::vector<long> weights;  // lambda_1 <= ... <= lambda_N
    Mat<K> basis;               // N x N, invertible

    OnePS(std::vector<long> w, Mat<K> b) : weights(std::move(w)), basis(std::move(b)) {
        long sum = 0;
        bool nonzero = false;
        for (std::size_t i = 0; i + 1 < weights.size(); ++i)
            if (weights[i] > weights[i + 1]) throw DomainError("1-PS weights must be sorted");
        for (long w_ : weights) {
            sum += w_;
            if (w_ != 0) nonzero = true;
        }
        if (sum != 0 || !nonzero) throw DomainError("1-PS weights must be nonzero and sum to zero");
        if (basis.rows() != static_cast<int>(weights.size()) || basis.cols() != basis.rows())
            throw DomainError("1-PS basis shape mismatch");
        if (!inverse(basis)) throw DomainError("1-PS basis is singular");
    }

    int n() const { return static_cast<int>(weights.size()); }
};

// A point of Hbar_{d2}^{(N-1)} x P(M_{N+1,N}): a degree-d2 form F in N
// variables and a nonzero (N+1) x N matrix.
template <class K>
struct GitPoint {
    MultiForm<K> F;
    Mat<K> M;

    GitPoint(MultiForm<K> f, Mat<K> m) : F(std::move(f)), M(std::move(m)) {
        if (F.nvars() != M.cols() || M.rows() != M.cols() + 1)
            throw DomainError("GIT point shape mismatch: F in N vars, M of shape (N+1) x N");
        bool nz = false;
        for (int i = 0; i < M.rows(); ++i)
            for (int j = 0; j < M.cols(); ++j)
                if (!M(i, j).is_zero()) nz = true;
        if (!nz) throw DomainError("GIT point with zero matrix");
    }

    int n() const { return M.cols(); }
};

// Weighted degree: max over monomials of F (in lambda's basis) of
// sum_i lambda_i r_i.
template <class K>
long deg_lambda(const MultiForm<K>& f_in_basis, const std::vector<long>& weights) {
    if (f_in_basis.is_zero()) throw DomainError("weighted degree of the zero form");
    bool first = true;
    long best = 0;
    for (const auto& [m, c] : f_in_basis.terms()) {
        long w = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) w += weights[i] * m[i];
        if (first || w > best) best = w;
        first = false;
    }
    return best;
}

template <class K>
long deg_lambda(const MultiForm<K>& f, const OnePS<K>& lambda) {
    return deg_lambda(f.transform(lambda.basis), lambda.weights);
}

// mu of the matrix factor alone: the largest weight whose column
// survives.  The sign convention is pinned by the two values computed
// in the source analysis: mu = lambda_N for a rank-N matrix under any
// 1-PS, and mu = -1 for a matrix whose last column vanishes under the
// weights (-1,..,-1,N-1).
template <class K>
long mu_matrix(const GitPoint<K>& x, const OnePS<K>& lambda) {
    auto inv = inverse(lambda.basis);
    if (!inv) throw DomainError("1-PS basis is singular");
    Mat<K> m = x.M * *inv;  // columns in lambda's basis
    std::optional<long> best;
    for (int j = 0; j < m.cols(); ++j) {
        bool nonzero = false;
        for (int i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) nonzero = true;
        if (nonzero && (!best || lambda.weights[j] > *best)) best = lambda.weights[j];
    }
    if (!best) throw DomainError("zero matrix has no mu");
    return *best;
}

// Hilbert-Mumford weight for the polarization O(alpha, beta):
// mu = alpha * deg_lambda(F) + beta * mu_M.
template <class K>
Rat mu_weight(const GitPoint<K>& x, const OnePS<K>& lambda, const Rat& alpha, const Rat& beta) {
    long df = deg_lambda(x.F, lambda);
    long dm = mu_matrix(x, lambda);
    return alpha * Rat(df, 1) + beta * Rat(dm, 1);
}

// The paper-style certificate for a rank-deficient matrix: a basis whose
// last vector spans the kernel, with weights (-1,..,-1,N-1).
template <class K>
std::optional<OnePS<K>> kernel_certificate(const GitPoint<K>& x) {
    int n = x.n();
    auto ker = kernel_basis(x.M);  // right kernel of M... M v = 0
    if (ker.rows() == 0) return std::nullopt;
    // build an invertible matrix whose LAST column is the kernel vector;
    // the 1-PS basis B is its inverse (so M B^{-1} has last column M v = 0)
    std::vector<K> v = ker.row(0);
    Mat<K> cols(n, n, x.M.ctx());
    for (int i = 0; i < n; ++i) cols(i, n - 1) = v[i];
    // greedily complete the kernel vector with standard vectors
    int filled = 0;
    for (int e = 0; e < n && filled < n - 1; ++e) {
        cols(e, filled) = K::one(x.M.ctx());
        Mat<K> cand(n, filled + 2, x.M.ctx());
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c <= filled; ++c) cand(r, c) = cols(r, c);
            cand(r, filled + 1) = cols(r, n - 1);
        }
        if (rank_of(cand) == filled + 2) ++filled;
        else cols(e, filled) = K::zero(x.M.ctx());
    }
    if (filled < n - 1) return std::nullopt;  // cannot happen: v != 0
    auto colsinv = inverse(cols);
    if (!colsinv) return std::nullopt;
    std::vector<long> w(n, -1);
    w[n - 1] = n - 1;
    return OnePS<K>(w, *colsinv);
}

// All sorted zero-sum weight vectors with |entries| <= bound, in
// lexicographic order (so the grid search is deterministic).
inline std::vector<std::vector<long>> weight_grid(int n, long bound) {
    std::vector<std::vector<long>> out;
    std::vector<long> w(n);
    auto rec = [&](auto&& self, int pos, long prev, long sum) -> void {
        if (pos == n) {
            if (sum != 0) return;
            bool nonzero = false;
            for (long v : w)
                if (v != 0) nonzero = true;
            if (nonzero) out.push_back(w);
            return;
        }
        for (long v = prev; v <= bound; ++v) {
            w[pos] = v;
            self(self, pos + 1, v, sum + v);
        }
    };
    rec(rec, 0, -bound, 0);
    return out;
}

// Finite destabilization search: (i) the kernel-certificate 1-PS, then
// (ii) the weight grid in the standard basis.  Returns a 1-PS with
// mu < 0 if one is found; "none" is NOT a proof of semistability.
template <class K>
std::optional<OnePS<K>> destabilize(const GitPoint<K>& x, const Rat& alpha, const Rat& beta,
                                    long bound) {
    if (bound < 1) throw DomainError("destabilize needs bound >= 1");
    if (auto cert = kernel_certificate(x)) {
        Rat mu = mu_weight(x, *cert, alpha, beta);
        if (mu.value() < 0) return cert;
    }
    auto id = Mat<K>::identity(x.n(), x.M.ctx());
    for (const auto& w : weight_grid(x.n(), bound)) {
        OnePS<K> lam(w, id);
        Rat mu = mu_weight(x, lam, alpha, beta);
        if (mu.value() < 0) return lam;
    }
    return std::nullopt;
}

} // namespace ci2

#endif
