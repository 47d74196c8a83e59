#ifndef CI2_BINARY_FORM_HPP
#define CI2_BINARY_FORM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ci2/errors.hpp"
#include "ci2/rng.hpp"
#include "ci2/upoly.hpp"

namespace ci2 {

// Homogeneous form of declared degree d in (X0, X1); coeff(j) is the
// coefficient of X0^(d-j) X1^j.  The zero form is representable at
// every degree, so "degree" is part of the type state, not of the data.
template <class K>
class BinaryForm {
public:
    using Ctx = typename K::Ctx;

    BinaryForm() : deg_(0) {}
    BinaryForm(int degree, Ctx ctx)
        : deg_(degree), ctx_(std::move(ctx)), c_(degree + 1, K::zero(ctx_)) {
        if (degree < 0) throw DomainError("negative form degree");
    }
    BinaryForm(int degree, std::vector<K> coeffs, Ctx ctx)
        : deg_(degree), ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != degree + 1)
            throw DomainError("coefficient count does not match declared degree");
    }

    static BinaryForm zero(int degree, const Ctx& ctx) { return BinaryForm(degree, ctx); }
    static BinaryForm monomial(int degree, int j, const K& c, const Ctx& ctx) {
        BinaryForm f(degree, ctx);
        f.c_[j] = c;
        return f;
    }
    // linear form L_{lambda,mu} = lambda*X1 - mu*X0 vanishing at (lambda,mu)
    static BinaryForm anchor_line(const K& lambda, const K& mu, const Ctx& ctx) {
        BinaryForm f(1, ctx);
        f.c_[0] = -mu;
        f.c_[1] = lambda;
        return f;
    }

    int degree() const { return deg_; }
    const Ctx& ctx() const { return ctx_; }
    const std::vector<K>& coeffs() const { return c_; }
    const K& coeff(int j) const { return c_[j]; }
    K& coeff(int j) { return c_[j]; }

    bool is_zero() const {
        for (const auto& a : c_)
            if (!a.is_zero()) return false;
        return true;
    }

    // degree in X1 of the dehomogenization F(1, x); -1 for the zero form
    int x1_degree() const {
        for (int j = deg_; j >= 0; --j)
            if (!c_[j].is_zero()) return j;
        return -1;
    }
    // multiplicity of the root (0:1), i.e. the power of X0 dividing F
    int x0_multiplicity() const {
        if (is_zero()) throw DomainError("x0_multiplicity of zero form");
        return deg_ - x1_degree();
    }
    // multiplicity of the root (1:0)
    int x1_multiplicity() const {
        if (is_zero()) throw DomainError("x1_multiplicity of zero form");
        for (int j = 0; j <= deg_; ++j)
            if (!c_[j].is_zero()) return j;
        return deg_ + 1;
    }

    BinaryForm operator-() const {
        BinaryForm r(deg_, ctx_);
        for (int j = 0; j <= deg_; ++j) r.c_[j] = -c_[j];
        return r;
    }
    BinaryForm operator+(const BinaryForm& o) const {
        require_same_degree(o);
        BinaryForm r(deg_, ctx_);
        for (int j = 0; j <= deg_; ++j) r.c_[j] = c_[j] + o.c_[j];
        return r;
    }
    BinaryForm operator-(const BinaryForm& o) const { return *this + (-o); }
    BinaryForm operator*(const BinaryForm& o) const {
        BinaryForm r(deg_ + o.deg_, ctx_);
        for (int i = 0; i <= deg_; ++i) {
            if (c_[i].is_zero()) continue;
            for (int j = 0; j <= o.deg_; ++j) r.c_[i + j] += c_[i] * o.c_[j];
        }
        return r;
    }
    BinaryForm operator*(const K& k) const {
        BinaryForm r(deg_, ctx_);
        for (int j = 0; j <= deg_; ++j) r.c_[j] = c_[j] * k;
        return r;
    }
    BinaryForm& operator+=(const BinaryForm& o) { *this = *this + o; return *this; }
    BinaryForm& operator-=(const BinaryForm& o) { *this = *this - o; return *this; }
    bool operator==(const BinaryForm& o) const { return deg_ == o.deg_ && c_ == o.c_; }
    bool operator!=(const BinaryForm& o) const { return !(*this == o); }

    K eval(const K& lambda, const K& mu) const {
        // Horner in two directions: sum c_j lambda^(d-j) mu^j
        K acc = K::zero(ctx_);
        K mupow = K::one(ctx_);
        std::vector<K> lampow(deg_ + 1, K::one(ctx_));
        for (int j = 1; j <= deg_; ++j) lampow[j] = lampow[j - 1] * lambda;
        for (int j = 0; j <= deg_; ++j) {
            acc += c_[j] * lampow[deg_ - j] * mupow;
            mupow = mupow * mu;
        }
        return acc;
    }

    // partial derivatives (degree drops by one; degree-0 input rejected)
    BinaryForm d_x0() const {
        if (deg_ == 0) throw DomainError("derivative of constant form");
        BinaryForm r(deg_ - 1, ctx_);
        for (int j = 0; j < deg_; ++j)
            r.c_[j] = c_[j] * K::from_int(deg_ - j, ctx_);
        return r;
    }
    BinaryForm d_x1() const {
        if (deg_ == 0) throw DomainError("derivative of constant form");
        BinaryForm r(deg_ - 1, ctx_);
        for (int j = 1; j <= deg_; ++j)
            r.c_[j - 1] = c_[j] * K::from_int(j, ctx_);
        return r;
    }

    UPoly<K> dehomogenize() const {  // F(1, x)
        typename UPoly<K>::Ctx pc{ctx_, "x"};
        return UPoly<K>(c_, pc);
    }
    static BinaryForm homogenize(const UPoly<K>& p, int degree, const Ctx& ctx) {
        if (p.degree() > degree) throw DomainError("homogenize: degree too small");
        BinaryForm f(degree, ctx);
        for (int j = 0; j <= p.degree(); ++j) f.c_[j] = p.coeff(j);
        return f;
    }

    BinaryForm swap_vars() const {  // X0 <-> X1
        BinaryForm r(deg_, ctx_);
        for (int j = 0; j <= deg_; ++j) r.c_[deg_ - j] = c_[j];
        return r;
    }

    template <class K2, class Fn>
    BinaryForm<K2> map(const typename K2::Ctx& ctx2, Fn&& f) const {
        std::vector<K2> out;
        out.reserve(c_.size());
        for (const auto& a : c_) out.push_back(f(a));
        return BinaryForm<K2>(deg_, std::move(out), ctx2);
    }

    // Division by the linear form lambda*X1 - mu*X0, exact by the
    // caller's guarantee that (lambda,mu) is a root.  Synthetic
    // division; only divides by lambda or mu, which must be units.
    BinaryForm divide_by_anchor_line(const K& lambda, const K& mu) const {
        if (deg_ == 0) throw DomainError("cannot divide constant form by linear form");
        BinaryForm q(deg_ - 1, ctx_);
        if (!lambda.is_zero()) {
            auto linv = K::exact_div(K::one(ctx_), lambda);
            if (!linv) throw DomainError("anchor coefficient not invertible");
            // n_j = lambda q_{j-1} - mu q_j  =>  q_{j-1} = (n_j + mu q_j) / lambda
            K prev = K::zero(ctx_);  // q_{deg} = 0
            for (int j = deg_; j >= 1; --j) {
                K qj = (c_[j] + mu * prev) * (*linv);
                q.c_[j - 1] = qj;
                prev = qj;
            }
            // consistency: c_0 must equal -mu q_0
            if (!(c_[0] + mu * q.c_[0]).is_zero())
                throw DomainError("form is not divisible by the anchor line");
        } else {
            auto minv = K::exact_div(K::one(ctx_), -mu);
            if (!minv) throw DomainError("anchor coefficient not invertible");
            // L = -mu X0: q_j = c_j / (-mu), and c_deg must vanish
            if (!c_[deg_].is_zero())
                throw DomainError("form is not divisible by the anchor line");
            for (int j = 0; j <= deg_ - 1; ++j) q.c_[j] = c_[j] * (*minv);
        }
        return q;
    }

    // Exact division of forms (works over integral domains; nullopt if
    // G is not a multiple of the divisor).
    static std::optional<BinaryForm> exact_div(const BinaryForm& num, const BinaryForm& den) {
        if (den.is_zero()) return std::nullopt;
        if (num.is_zero()) return BinaryForm(std::max(0, num.deg_ - den.deg_), num.ctx_);
        if (den.deg_ > num.deg_) return std::nullopt;
        int m0 = den.x0_multiplicity() > num.x0_multiplicity() ? -1 : 0;
        if (m0 < 0) return std::nullopt;
        auto q = UPoly<K>::exact_div(num.dehomogenize(), den.dehomogenize());
        if (!q) return std::nullopt;
        if (q->degree() > num.deg_ - den.deg_) return std::nullopt;
        return homogenize(*q, num.deg_ - den.deg_, num.ctx_);
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int j = 0; j <= deg_; ++j) {
            if (c_[j].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += c_[j].to_string();
            if (deg_ - j > 0) s += "*X0" + (deg_ - j > 1 ? "^" + std::to_string(deg_ - j) : "");
            if (j > 0) s += "*X1" + (j > 1 ? "^" + std::to_string(j) : "");
        }
        return s;
    }

private:
    void require_same_degree(const BinaryForm& o) const {
        if (deg_ != o.deg_) throw DomainError("binary form degree mismatch");
    }

    int deg_;
    Ctx ctx_;
    std::vector<K> c_;
};

template <class K>
BinaryForm<K> random_form(int degree, const typename K::Ctx& ctx, Rng& rng) {
    BinaryForm<K> f(degree, ctx);
    for (int j = 0; j <= degree; ++j) f.coeff(j) = random_element(ctx, rng);
    return f;
}

template <class K>
BinaryForm<K> random_nonzero_form(int degree, const typename K::Ctx& ctx, Rng& rng) {
    for (int i = 0; i < 1000; ++i) {
        auto f = random_form<K>(degree, ctx, rng);
        if (!f.is_zero()) return f;
    }
    throw DomainError("could not sample a nonzero form");
}

// Monic gcd of binary forms over a field: X0-multiplicities plus the
// Euclidean gcd of the dehomogenizations.
template <class K>
BinaryForm<K> gcd_forms(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    static_assert(K::is_field, "gcd_forms needs a field");
    if (f.is_zero() || g.is_zero()) throw DomainError("gcd with zero form");
    int m = std::min(f.x0_multiplicity(), g.x0_multiplicity());
    auto u = UPoly<K>::gcd(f.dehomogenize(), g.dehomogenize());
    auto base = BinaryForm<K>::homogenize(u, u.degree(), f.ctx());
    if (m == 0) return base;
    BinaryForm<K> x0 = BinaryForm<K>::monomial(m, 0, K::one(f.ctx()), f.ctx());
    return x0 * base;
}

template <class K>
int gcd_degree(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    return gcd_forms(f, g).degree();
}

template <class K>
bool divides_form(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    return BinaryForm<K>::exact_div(g, f).has_value();
}

// c*g == f for some nonzero scalar c?
template <class K>
bool proportional(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    if (f.degree() != g.degree()) return false;
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    int j0 = -1;
    for (int j = 0; j <= f.degree(); ++j)
        if (!f.coeff(j).is_zero() || !g.coeff(j).is_zero()) { j0 = j; break; }
    // cross-multiplication avoids division, so this works over domains
    const K& a = f.coeff(j0);
    const K& b = g.coeff(j0);
    if (a.is_zero() || b.is_zero()) return false;
    for (int j = 0; j <= f.degree(); ++j)
        if (f.coeff(j) * b != g.coeff(j) * a) return false;
    return true;
}

// Content of a form over k[t]: monic gcd of the coefficient polynomials.
template <class K>
UPoly<K> form_content(const BinaryForm<UPoly<K>>& f) {
    UPoly<K> c = UPoly<K>::zero(f.ctx());
    for (int j = 0; j <= f.degree(); ++j) c = UPoly<K>::gcd(c, f.coeff(j));
    return c;
}

// t-adic valuation of a form over k[t]: min over coefficients of the
// order of vanishing at t = 0.  The zero form has no valuation.
template <class K>
int form_valuation_t(const BinaryForm<UPoly<K>>& f) {
    if (f.is_zero()) throw DomainError("t-valuation of zero form");
    int v = -1;
    for (int j = 0; j <= f.degree(); ++j) {
        const auto& p = f.coeff(j);
        if (p.is_zero()) continue;
        int w = 0;
        while (p.coeff(w).is_zero()) ++w;
        if (v < 0 || w < v) v = w;
    }
    return v;
}

// Order-l term of a form over k[t]: coefficient of t^l, a form over k.
template <class K>
BinaryForm<K> form_t_coefficient(const BinaryForm<UPoly<K>>& f, int l, const typename K::Ctx& base) {
    BinaryForm<K> out(f.degree(), base);
    for (int j = 0; j <= f.degree(); ++j) out.coeff(j) = f.coeff(j).coeff(l);
    return out;
}

} // namespace ci2

#endif
