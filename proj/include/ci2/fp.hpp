#ifndef CI2_FP_HPP
#define CI2_FP_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "ci2/errors.hpp"

namespace ci2 {

// Prime field F_p with runtime modulus.  Elements carry their modulus;
// the additive identity may have p==0 and unifies with any modulus, so
// default-constructed zeros behave in generic code.
class Fp {
public:
    struct Ctx {
        std::int64_t p = 0;
        bool operator==(const Ctx&) const = default;
    };

    Fp() : v_(0), p_(0) {}
    Fp(std::int64_t v, std::int64_t p) : p_(p) {
        if (p <= 1) throw DomainError("invalid prime modulus");
        v_ = v % p;
        if (v_ < 0) v_ += p;
    }

    static Fp zero(const Ctx&) { return Fp(); }
    static Fp one(const Ctx& c) { return Fp(1, c.p); }
    static Fp from_int(long n, const Ctx& c) { return Fp(n, c.p); }
    static constexpr bool is_field = true;
    static long characteristic(const Ctx& c) { return static_cast<long>(c.p); }

    Ctx ctx() const { return Ctx{p_}; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }

    Fp operator-() const {
        if (v_ == 0) return *this;
        return raw(p_ - v_, p_);
    }
    Fp operator+(const Fp& o) const {
        std::int64_t p = unify(o);
        if (p == 0) return Fp();
        std::int64_t s = v_ + o.v_;
        if (s >= p) s -= p;
        return raw(s, p);
    }
    Fp operator-(const Fp& o) const { return *this + (-o); }
    Fp operator*(const Fp& o) const {
        std::int64_t p = unify(o);
        if (p == 0 || v_ == 0 || o.v_ == 0) return Fp();
        __int128 prod = static_cast<__int128>(v_) * o.v_;
        return raw(static_cast<std::int64_t>(prod % p), p);
    }
    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }
    bool operator==(const Fp& o) const { unify(o); return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    Fp inv() const {
        if (v_ == 0) throw DomainError("inverse of zero in F_p");
        // extended Euclid
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        std::int64_t r = x0 % p_;
        if (r < 0) r += p_;
        return raw(r, p_);
    }

    static std::optional<Fp> exact_div(const Fp& a, const Fp& b) {
        if (b.is_zero()) return std::nullopt;
        return a * b.inv();
    }

    std::string to_string() const { return std::to_string(v_); }

private:
    static Fp raw(std::int64_t v, std::int64_t p) {
        Fp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }
    std::int64_t unify(const Fp& o) const {
        if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
            throw DomainError("mixed F_p moduli");
        return p_ != 0 ? p_ : o.p_;
    }

    std::int64_t v_;
    std::int64_t p_;
};

} // namespace ci2

#endif
