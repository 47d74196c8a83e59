#ifndef CI2_RATFUNC_HPP
#define CI2_RATFUNC_HPP

#include <optional>
#include <string>
#include <utility>

#include "ci2/upoly.hpp"

namespace ci2 {

// The field of rational functions K(t), K a field.  Always kept reduced
// with a monic denominator, so equality is structural.
template <class K>
class RatFunc {
    static_assert(K::is_field, "RatFunc needs a field of coefficients");

public:
    using P = UPoly<K>;
    using Ctx = typename P::Ctx;

    RatFunc() = default;
    explicit RatFunc(Ctx c) : num_(c), den_(P::one(c)) {}
    RatFunc(P num, P den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DomainError("rational function with zero denominator");
        reduce();
    }
    explicit RatFunc(P num) : num_(std::move(num)), den_(P::one(num_.ctx())) {}

    static RatFunc zero(const Ctx& c) { return RatFunc(c); }
    static RatFunc one(const Ctx& c) { return RatFunc(P::one(c)); }
    static RatFunc from_int(long n, const Ctx& c) { return RatFunc(P::from_int(n, c)); }
    static RatFunc t(const Ctx& c) { return RatFunc(P::t(c)); }
    static constexpr bool is_field = true;
    static long characteristic(const Ctx& c) { return P::characteristic(c); }

    Ctx ctx() const { return num_.is_zero() ? den_.ctx() : num_.ctx(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const P& num() const { return num_; }
    const P& den() const { return den_; }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const { return raw(-num_, den_); }
    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const {
        return RatFunc(num_ * o.num_, den_ * o.den_);
    }
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inv() const {
        if (is_zero()) throw DomainError("inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    static std::optional<RatFunc> exact_div(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) return std::nullopt;
        return a * b.inv();
    }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    static RatFunc raw(P n, P d) {
        RatFunc r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }
    void reduce() {
        if (num_.is_zero()) {
            den_ = P::one(den_.ctx());
            return;
        }
        P g = P::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = *P::exact_div(num_, g);
            den_ = *P::exact_div(den_, g);
        }
        K lc = den_.leading();
        if (!lc.is_one()) {
            K inv = lc.inv();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    P num_, den_;
};

} // namespace ci2

#endif
