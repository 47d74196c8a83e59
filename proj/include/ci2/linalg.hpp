#ifndef CI2_LINALG_HPP
#define CI2_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ci2/errors.hpp"

namespace ci2 {

// Dense matrices over an exact domain.  Row-reduction routines assume a
// field; the fraction-free determinant (Bareiss) only needs exact
// division and is the one used over k[t] and other non-fields.
template <class K>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols, typename K::Ctx ctx)
        : r_(rows), c_(cols), ctx_(std::move(ctx)), a_(static_cast<std::size_t>(rows) * cols, K::zero(ctx_)) {}

    static Mat identity(int n, const typename K::Ctx& ctx) {
        Mat m(n, n, ctx);
        for (int i = 0; i < n; ++i) m(i, i) = K::one(ctx);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    const typename K::Ctx& ctx() const { return ctx_; }

    K& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const K& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    Mat operator*(const Mat& o) const {
        if (c_ != o.r_) throw DomainError("matrix shape mismatch");
        Mat out(r_, o.c_, ctx_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const K& aik = (*this)(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < o.c_; ++j) out(i, j) += aik * o(k, j);
            }
        return out;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (static_cast<int>(v.size()) != c_) throw DomainError("matrix/vector shape mismatch");
        std::vector<K> out(r_, K::zero(ctx_));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    void append_row(const std::vector<K>& row) {
        if (static_cast<int>(row.size()) != c_) throw DomainError("row length mismatch");
        a_.insert(a_.end(), row.begin(), row.end());
        ++r_;
    }
    std::vector<K> row(int i) const {
        return std::vector<K>(a_.begin() + static_cast<std::size_t>(i) * c_,
                              a_.begin() + static_cast<std::size_t>(i + 1) * c_);
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

private:
    int r_ = 0, c_ = 0;
    typename K::Ctx ctx_;
    std::vector<K> a_;
};

// In-place reduced row echelon form over a field; returns the rank.
template <class K>
int rref(Mat<K>& m) {
    static_assert(K::is_field, "rref needs a field");
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        m.swap_rows(rank, pivot);
        K inv = m(rank, col).inv();
        for (int j = col; j < m.cols(); ++j) m(rank, j) = m(rank, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, col).is_zero()) continue;
            K f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Canonical basis of the row space: RREF rows with zero rows dropped.
template <class K>
Mat<K> row_basis(Mat<K> m) {
    int rank = rref(m);
    Mat<K> out(0, m.cols(), m.ctx());
    for (int i = 0; i < rank; ++i) out.append_row(m.row(i));
    return out;
}

template <class K>
int rank_of(Mat<K> m) {
    return rref(m);
}

// Right-kernel basis (canonical, from the RREF).
template <class K>
Mat<K> kernel_basis(Mat<K> m) {
    int rank = rref(m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(m.cols(), false);
    for (int i = 0, col = 0; i < rank; ++i) {
        while (col < m.cols() && m(i, col).is_zero()) ++col;
        pivot_col.push_back(col);
        is_pivot[col] = true;
    }
    Mat<K> out(0, m.cols(), m.ctx());
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<K> v(m.cols(), K::zero(m.ctx()));
        v[free] = K::one(m.ctx());
        for (int i = 0; i < rank; ++i) v[pivot_col[i]] = -m(i, free);
        out.append_row(v);
    }
    return out;
}

// Solves A x = b over a field; nullopt if inconsistent.  When the
// system is underdetermined the free variables are set to zero.
template <class K>
std::optional<std::vector<K>> solve(const Mat<K>& a, const std::vector<K>& b) {
    Mat<K> aug(a.rows(), a.cols() + 1, a.ctx());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    int rank = rref(aug);
    std::vector<K> x(a.cols(), K::zero(a.ctx()));
    for (int i = 0; i < rank; ++i) {
        int col = 0;
        while (col < aug.cols() && aug(i, col).is_zero()) ++col;
        if (col >= a.cols()) return std::nullopt;  // pivot in the b column: 0 = 1
        x[col] = aug(i, a.cols());
    }
    return x;
}

// Fraction-free (Bareiss) determinant over an integral domain with
// exact division.  Divisions by earlier pivots are exact; a failed
// division would mean the domain is not an integral domain.
template <class K>
K det_bareiss(Mat<K> m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return K::one(m.ctx());
    K prev = K::one(m.ctx());
    bool neg = false;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k).is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m(i, k).is_zero()) { pivot = i; break; }
            if (pivot < 0) return K::zero(m.ctx());
            m.swap_rows(k, pivot);
            neg = !neg;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                K num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                auto q = K::exact_div(num, prev);
                if (!q) throw DomainError("Bareiss division not exact: not an integral domain?");
                m(i, j) = *q;
            }
        prev = m(k, k);
    }
    K det = m(n - 1, n - 1);
    return neg ? -det : det;
}

// Inverse over a field; nullopt when singular.
template <class K>
std::optional<Mat<K>> inverse(const Mat<K>& a) {
    if (a.rows() != a.cols()) throw DomainError("inverse of non-square matrix");
    int n = a.rows();
    Mat<K> aug(n, 2 * n, a.ctx());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = K::one(a.ctx());
    }
    int rank = rref(aug);
    if (rank < n) return std::nullopt;
    Mat<K> inv(n, n, a.ctx());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

} // namespace ci2

#endif
