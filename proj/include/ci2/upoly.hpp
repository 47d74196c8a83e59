#ifndef CI2_UPOLY_HPP
#define CI2_UPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ci2/errors.hpp"

namespace ci2 {

// Dense univariate polynomials K[t] over an exact base domain K.
// Coefficient vector is normalized: no trailing zeros, so the zero
// polynomial has an empty vector and degree() == -1.
template <class K>
class UPoly {
public:
    struct Ctx {
        typename K::Ctx base;
        std::string var = "t";
    };

    UPoly() = default;
    explicit UPoly(Ctx ctx) : ctx_(std::move(ctx)) {}
    UPoly(std::vector<K> coeffs, Ctx ctx) : c_(std::move(coeffs)), ctx_(std::move(ctx)) { trim(); }

    static UPoly zero(const Ctx& c) { return UPoly(c); }
    static UPoly one(const Ctx& c) { return constant(K::one(c.base), c); }
    static UPoly from_int(long n, const Ctx& c) { return constant(K::from_int(n, c.base), c); }
    static UPoly constant(const K& k, const Ctx& c) {
        UPoly r(c);
        if (!k.is_zero()) r.c_.push_back(k);
        return r;
    }
    // the variable t
    static UPoly t(const Ctx& c) {
        UPoly r(c);
        r.c_ = {K::zero(c.base), K::one(c.base)};
        return r;
    }
    static constexpr bool is_field = false;
    static long characteristic(const Ctx& c) { return K::characteristic(c.base); }

    const Ctx& ctx() const { return ctx_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K::zero(ctx_.base);
        return c_[i];
    }
    K leading() const {
        if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_constant() const { return c_.size() <= 1; }
    K constant_value() const { return coeff(0); }

    UPoly operator-() const {
        UPoly r(ctx_);
        r.c_.reserve(c_.size());
        for (const auto& a : c_) r.c_.push_back(-a);
        return r;
    }
    UPoly operator+(const UPoly& o) const {
        UPoly r(pick_ctx(o));
        std::size_t n = std::max(c_.size(), o.c_.size());
        r.c_.resize(n, K::zero(r.ctx_.base));
        for (std::size_t i = 0; i < n; ++i) r.c_[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
        r.trim();
        return r;
    }
    UPoly operator-(const UPoly& o) const { return *this + (-o); }
    UPoly operator*(const UPoly& o) const {
        UPoly r(pick_ctx(o));
        if (is_zero() || o.is_zero()) return r;
        r.c_.assign(c_.size() + o.c_.size() - 1, K::zero(r.ctx_.base));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        r.trim();
        return r;
    }
    UPoly operator*(const K& k) const {
        UPoly r(ctx_);
        if (k.is_zero()) return r;
        r.c_.reserve(c_.size());
        for (const auto& a : c_) r.c_.push_back(a * k);
        r.trim();
        return r;
    }
    UPoly& operator+=(const UPoly& o) { *this = *this + o; return *this; }
    UPoly& operator-=(const UPoly& o) { *this = *this - o; return *this; }
    UPoly& operator*=(const UPoly& o) { *this = *this * o; return *this; }
    bool operator==(const UPoly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != o.c_[i]) return false;
        return true;
    }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    K eval(const K& x) const {
        K acc = K::zero(ctx_.base);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Maps coefficients into another domain (e.g. K -> Ext<K>).
    template <class K2, class Fn>
    UPoly<K2> map(const typename UPoly<K2>::Ctx& ctx2, Fn&& f) const {
        std::vector<K2> out;
        out.reserve(c_.size());
        for (const auto& a : c_) out.push_back(f(a));
        return UPoly<K2>(std::move(out), ctx2);
    }

    UPoly derivative() const {
        UPoly r(ctx_);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.c_.push_back(c_[i] * K::from_int(static_cast<long>(i), ctx_.base));
        r.trim();
        return r;
    }

    // Exact division in K[t]; nullopt if not exact.  Requires exact
    // division in K at every step, so it works over integral domains.
    static std::optional<UPoly> exact_div(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) return std::nullopt;
        UPoly r = a;
        UPoly q(a.pick_ctx(b));
        if (a.is_zero()) return q;
        if (a.degree() < b.degree()) return std::nullopt;
        q.c_.assign(a.degree() - b.degree() + 1, K::zero(q.ctx_.base));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            auto lead = K::exact_div(r.leading(), b.leading());
            if (!lead) return std::nullopt;
            int shift = r.degree() - b.degree();
            q.c_[shift] = *lead;
            // r -= lead * t^shift * b
            for (int i = 0; i <= b.degree(); ++i)
                r.c_[i + shift] -= *lead * b.c_[i];
            r.trim();
        }
        if (!r.is_zero()) return std::nullopt;
        q.trim();
        return q;
    }

    // Quotient/remainder over a field K.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        static_assert(K::is_field, "divmod needs field coefficients");
        if (b.is_zero()) throw DomainError("division by zero polynomial");
        UPoly r = a, q(a.pick_ctx(b));
        K lcinv = b.leading().inv();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            K lead = r.leading() * lcinv;
            int shift = r.degree() - b.degree();
            if (q.c_.size() < static_cast<std::size_t>(shift + 1))
                q.c_.resize(shift + 1, K::zero(q.ctx_.base));
            q.c_[shift] += lead;
            for (int i = 0; i <= b.degree(); ++i)
                r.c_[i + shift] -= lead * b.c_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    // Monic gcd over a field.
    static UPoly gcd(UPoly a, UPoly b) {
        static_assert(K::is_field, "gcd needs field coefficients");
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            (void)q;
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return a.monic();
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        K lcinv = leading().inv();
        return *this * lcinv;
    }

    // Multiplicity of r as a root.
    int valuation_at(const K& r) const {
        if (is_zero()) throw DomainError("valuation of zero polynomial");
        UPoly p = *this;
        int v = 0;
        while (p.eval(r).is_zero()) {
            p = p.deflate_root(r);
            ++v;
        }
        return v;
    }

    // Divides exactly by (t - r); caller guarantees eval(r)==0.
    UPoly deflate_root(const K& r) const {
        UPoly q(ctx_);
        if (is_zero()) return q;
        q.c_.assign(c_.size() - 1, K::zero(ctx_.base));
        K carry = K::zero(ctx_.base);
        for (int i = degree(); i >= 1; --i) {
            carry = c_[i] + carry * r;
            q.c_[i - 1] = carry;
        }
        q.trim();
        return q;
    }

    // p(t + r): shift of variable.
    UPoly taylor_shift(const K& r) const {
        UPoly acc(ctx_);
        UPoly lin(ctx_);  // t + r
        lin.c_ = {r, K::one(ctx_.base)};
        lin.trim();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * lin + constant(*it, ctx_);
        return acc;
    }

    // Reversal as a degree-n polynomial: t^n p(1/t).
    UPoly reverse(int n) const {
        if (degree() > n) throw DomainError("reverse: degree exceeds bound");
        UPoly r(ctx_);
        r.c_.assign(n + 1, K::zero(ctx_.base));
        for (int i = 0; i <= degree(); ++i) r.c_[n - i] = c_[i];
        r.trim();
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            std::string cs = c_[i].to_string();
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (s.empty()) s += neg ? "-" : "";
            else s += neg ? " - " : " + ";
            s += cs;
            if (i >= 1) s += "*" + ctx_.var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    Ctx pick_ctx(const UPoly& o) const { return c_.empty() && !o.c_.empty() ? o.ctx_ : ctx_; }

    std::vector<K> c_;
    Ctx ctx_;
};

// Content (monic gcd of coefficients as elements of the base field) is
// defined where K is a field; used via binary forms over UPoly.

} // namespace ci2

#endif
