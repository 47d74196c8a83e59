#ifndef CI2_EXT_HPP
#define CI2_EXT_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "ci2/upoly.hpp"

namespace ci2 {

// Thrown when a quotient-ring inversion meets a zero divisor: the gcd
// found is a proper factor of the modulus.  Callers working over a
// possibly-reducible modulus catch this and split the computation
// (dynamic evaluation); nobody has to prove irreducibility up front.
template <class K>
struct ExtSplit : Error {
    UPoly<K> factor;
    explicit ExtSplit(UPoly<K> f)
        : Error("zero divisor in quotient ring; modulus splits"), factor(std::move(f)) {}
};

// Simple quotient extension K[x]/(f), K a field, f monic nonconstant.
template <class K>
class Ext {
    static_assert(K::is_field, "Ext needs a field base");

public:
    using P = UPoly<K>;

    struct CtxData {
        P modulus;
        std::string name = "x";
    };
    using Ctx = std::shared_ptr<const CtxData>;

    static Ctx make_ctx(P modulus, std::string name = "x") {
        if (modulus.degree() < 1) throw DomainError("extension modulus must be nonconstant");
        auto data = std::make_shared<CtxData>();
        data->modulus = modulus.monic();
        data->name = std::move(name);
        return data;
    }

    Ext() = default;
    Ext(P value, Ctx c) : ctx_(std::move(c)) { v_ = reduce(std::move(value), ctx_); }

    static Ext zero(const Ctx& c) { return Ext(P::zero(c->modulus.ctx()), c); }
    static Ext one(const Ctx& c) { return Ext(P::one(c->modulus.ctx()), c); }
    static Ext from_int(long n, const Ctx& c) { return Ext(P::from_int(n, c->modulus.ctx()), c); }
    static Ext from_base(const K& k, const Ctx& c) {
        return Ext(P::constant(k, c->modulus.ctx()), c);
    }
    // the residue class of x
    static Ext generator(const Ctx& c) { return Ext(P::t(c->modulus.ctx()), c); }
    static constexpr bool is_field = true;  // a field when the modulus is irreducible;
                                            // otherwise inv() may throw ExtSplit
    static long characteristic(const Ctx& c) { return P::characteristic(c->modulus.ctx()); }

    Ctx ctx() const { return ctx_; }
    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_.is_one(); }
    const P& rep() const { return v_; }

    Ext operator-() const { return raw(-v_, ctx_); }
    Ext operator+(const Ext& o) const { return raw(v_ + o.v_, pick(o)); }
    Ext operator-(const Ext& o) const { return raw(v_ - o.v_, pick(o)); }
    Ext operator*(const Ext& o) const {
        Ctx c = pick(o);
        return Ext(v_ * o.v_, c);
    }
    Ext& operator+=(const Ext& o) { *this = *this + o; return *this; }
    Ext& operator-=(const Ext& o) { *this = *this - o; return *this; }
    Ext& operator*=(const Ext& o) { *this = *this * o; return *this; }
    bool operator==(const Ext& o) const { return v_ == o.v_; }
    bool operator!=(const Ext& o) const { return !(*this == o); }

    Ext inv() const {
        if (is_zero()) throw DomainError("inverse of zero in extension");
        if (!ctx_) throw DomainError("extension element without context");
        // extended Euclid in K[x]
        P a = v_, b = ctx_->modulus;
        P s0 = P::one(a.ctx()), s1 = P::zero(a.ctx());
        while (!b.is_zero()) {
            auto [q, r] = P::divmod(a, b);
            P s2 = s0 - q * s1;
            a = std::move(b);
            b = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (a.degree() > 0) throw ExtSplit<K>(a.monic());
        // a is a nonzero constant: s0 * v_ = a mod modulus
        K c = a.constant_value().inv();
        return Ext(s0 * c, ctx_);
    }

    static std::optional<Ext> exact_div(const Ext& a, const Ext& b) {
        if (b.is_zero()) return std::nullopt;
        return a * b.inv();
    }

    std::string to_string() const {
        return v_.to_string();
    }

private:
    static Ext raw(P v, Ctx c) {
        Ext r;
        r.v_ = std::move(v);
        r.ctx_ = std::move(c);
        return r;
    }
    static P reduce(P v, const Ctx& c) {
        if (!c) return v;
        if (v.is_zero() || v.degree() < c->modulus.degree()) return v;
        return P::divmod(v, c->modulus).second;
    }
    Ctx pick(const Ext& o) const { return ctx_ ? ctx_ : o.ctx_; }

    P v_;
    Ctx ctx_;
};

} // namespace ci2

#endif
