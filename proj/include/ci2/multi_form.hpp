#ifndef CI2_MULTI_FORM_HPP
#define CI2_MULTI_FORM_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ci2/errors.hpp"
#include "ci2/linalg.hpp"
#include "ci2/rng.hpp"

namespace ci2 {

// All monomials of degree d in n variables, in a fixed order.
inline std::vector<std::vector<int>> monomials_of_degree(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> m(n, 0);
    m[0] = d;
    for (;;) {
        out.push_back(m);
        int i = n - 2;
        while (i >= 0 && m[i] == 0) --i;
        if (i < 0) break;
        --m[i];
        int rest = 1;
        for (int j = i + 1; j < n; ++j) {
            rest += m[j];
            m[j] = 0;
        }
        m[i + 1] = rest;
    }
    return out;
}

// Sparse homogeneous form of declared degree in nvars variables.
template <class K>
class MultiForm {
public:
    using Mono = std::vector<int>;  // exponents, summing to degree
    using Ctx = typename K::Ctx;

    MultiForm() : n_(1), deg_(0) {}
    MultiForm(int nvars, int degree, Ctx ctx)
        : n_(nvars), deg_(degree), ctx_(std::move(ctx)) {
        if (nvars < 1 || degree < 0) throw DomainError("bad multiform shape");
    }

    static MultiForm monomial(int nvars, const Mono& m, const K& c, const Ctx& ctx) {
        int d = 0;
        for (int e : m) d += e;
        MultiForm f(nvars, d, ctx);
        if (!c.is_zero()) f.t_[m] = c;
        return f;
    }

    int nvars() const { return n_; }
    int degree() const { return deg_; }
    const Ctx& ctx() const { return ctx_; }
    const std::map<Mono, K>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    K coeff(const Mono& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? K::zero(ctx_) : it->second;
    }
    void set_coeff(const Mono& m, const K& c) {
        int d = 0;
        for (int e : m) d += e;
        if (static_cast<int>(m.size()) != n_ || d != deg_)
            throw DomainError("monomial does not match the declared degree");
        if (c.is_zero()) t_.erase(m);
        else t_[m] = c;
    }

    MultiForm operator-() const {
        MultiForm r(n_, deg_, ctx_);
        for (const auto& [m, c] : t_) r.t_[m] = -c;
        return r;
    }
    MultiForm operator+(const MultiForm& o) const {
        require_shape(o);
        MultiForm r = *this;
        for (const auto& [m, c] : o.t_) {
            auto it = r.t_.find(m);
            if (it == r.t_.end()) {
                r.t_[m] = c;
            } else {
                it->second += c;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
        return r;
    }
    MultiForm operator-(const MultiForm& o) const { return *this + (-o); }
    MultiForm operator*(const MultiForm& o) const {
        if (n_ != o.n_) throw DomainError("multiform variable count mismatch");
        MultiForm r(n_, deg_ + o.deg_, ctx_);
        for (const auto& [m1, c1] : t_)
            for (const auto& [m2, c2] : o.t_) {
                Mono m = m1;
                for (int i = 0; i < n_; ++i) m[i] += m2[i];
                K c = c1 * c2;
                auto it = r.t_.find(m);
                if (it == r.t_.end()) {
                    if (!c.is_zero()) r.t_[m] = c;
                } else {
                    it->second += c;
                    if (it->second.is_zero()) r.t_.erase(it);
                }
            }
        return r;
    }
    MultiForm operator*(const K& k) const {
        MultiForm r(n_, deg_, ctx_);
        if (k.is_zero()) return r;
        for (const auto& [m, c] : t_) {
            K v = c * k;
            if (!v.is_zero()) r.t_[m] = v;
        }
        return r;
    }
    bool operator==(const MultiForm& o) const {
        return n_ == o.n_ && deg_ == o.deg_ && t_ == o.t_;
    }
    bool operator!=(const MultiForm& o) const { return !(*this == o); }

    MultiForm pow(int e) const {
        MultiForm acc = monomial(n_, Mono(n_, 0), K::one(ctx_), ctx_);
        for (int i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    K eval(const std::vector<K>& point) const {
        if (static_cast<int>(point.size()) != n_) throw DomainError("evaluation point arity");
        K acc = K::zero(ctx_);
        for (const auto& [m, c] : t_) {
            K term = c;
            for (int i = 0; i < n_; ++i)
                for (int e = 0; e < m[i]; ++e) term = term * point[i];
            acc += term;
        }
        return acc;
    }

    // Substitute X_i -> sum_j A(i,j) X_j.
    MultiForm transform(const Mat<K>& a) const {
        if (a.rows() != n_ || a.cols() != n_) throw DomainError("frame shape mismatch");
        std::vector<MultiForm> lin;
        for (int i = 0; i < n_; ++i) {
            MultiForm li(n_, 1, ctx_);
            for (int j = 0; j < n_; ++j) {
                Mono m(n_, 0);
                m[j] = 1;
                if (!a(i, j).is_zero()) li.t_[m] = a(i, j);
            }
            lin.push_back(li);
        }
        MultiForm out(n_, deg_, ctx_);
        for (const auto& [m, c] : t_) {
            MultiForm term = monomial(n_, Mono(n_, 0), c, ctx_);
            for (int i = 0; i < n_; ++i)
                for (int e = 0; e < m[i]; ++e) term = term * lin[i];
            out = out + term;
        }
        return out;
    }

    // Substitute variables by given linear (or any) forms in possibly
    // different variable count; used to push a form through a matrix
    // parametrization.
    MultiForm compose(const std::vector<MultiForm>& images) const {
        if (static_cast<int>(images.size()) != n_) throw DomainError("composition arity");
        int outn = images[0].nvars();
        MultiForm out(outn, deg_ * images[0].degree(), ctx_);
        for (const auto& [m, c] : t_) {
            MultiForm term = MultiForm::monomial(outn, Mono(outn, 0), c, ctx_);
            for (int i = 0; i < n_; ++i)
                for (int e = 0; e < m[i]; ++e) term = term * images[i];
            out = out + term;
        }
        return out;
    }

    std::string to_string(const std::vector<std::string>& names = {}) const {
        if (t_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : t_) {
            if (!s.empty()) s += " + ";
            s += c.to_string();
            for (int i = 0; i < n_; ++i) {
                if (m[i] == 0) continue;
                s += "*" + (i < static_cast<int>(names.size()) ? names[i] : "X" + std::to_string(i));
                if (m[i] > 1) s += "^" + std::to_string(m[i]);
            }
        }
        return s;
    }

private:
    void require_shape(const MultiForm& o) const {
        if (n_ != o.n_ || deg_ != o.deg_) throw DomainError("multiform shape mismatch");
    }

    int n_, deg_;
    Ctx ctx_;
    std::map<Mono, K> t_;
};

template <class K>
MultiForm<K> random_multiform(int nvars, int degree, const typename K::Ctx& ctx, Rng& rng,
                              int sparsity_denominator = 1) {
    MultiForm<K> f(nvars, degree, ctx);
    // iterate all exponent vectors of total degree `degree`
    std::vector<int> m(nvars, 0);
    m[0] = degree;
    for (;;) {
        if (sparsity_denominator <= 1 || rng.uniform(0, sparsity_denominator - 1) == 0)
            f.set_coeff(m, random_element(ctx, rng));
        // next composition of `degree` into nvars parts
        int i = nvars - 2;
        while (i >= 0 && m[i] == 0) --i;
        if (i < 0) break;
        --m[i];
        int rest = 1;
        for (int j = i + 1; j < nvars; ++j) {
            rest += m[j];
            m[j] = 0;
        }
        m[i + 1] = rest;
    }
    return f;
}

// Random integer unimodular frame, mapped into K: a product of
// elementary operations, so the inverse is exact in every field.
template <class K>
Mat<K> random_unimodular_frame(int n, const typename K::Ctx& ctx, Rng& rng) {
    Mat<K> a = Mat<K>::identity(n, ctx);
    int ops = 2 * n + static_cast<int>(rng.uniform(0, n));
    for (int s = 0; s < ops; ++s) {
        int i = static_cast<int>(rng.uniform(0, n - 1));
        int j = static_cast<int>(rng.uniform(0, n - 1));
        if (i == j) {
            a.swap_rows(i, (i + 1) % n);
            continue;
        }
        K c = K::from_int(rng.uniform(-2, 2), ctx);
        for (int col = 0; col < n; ++col) a(i, col) += c * a(j, col);
    }
    return a;
}

} // namespace ci2

#endif
