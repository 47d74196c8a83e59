#ifndef CI2_RATIONAL_HPP
#define CI2_RATIONAL_HPP

#include <gmpxx.h>
#include <optional>
#include <string>

#include "ci2/errors.hpp"

namespace ci2 {

// The field Q.  Thin value wrapper around mpq_class: gmpxx expression
// templates do not mix well with generic code, so every operator here
// returns a plain Rat.
class Rat {
public:
    struct Ctx {};

    Rat() : v_(0) {}
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_.canonicalize();
    }

    static Rat zero(const Ctx&) { return Rat(); }
    static Rat one(const Ctx&) { return from_int(1, Ctx{}); }
    static Rat from_int(long n, const Ctx&) { return Rat(mpq_class(n)); }
    static constexpr bool is_field = true;
    static long characteristic(const Ctx&) { return 0; }

    Ctx ctx() const { return Ctx{}; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }

    Rat inv() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    // Exact division; nullopt only on division by zero (Q is a field).
    static std::optional<Rat> exact_div(const Rat& a, const Rat& b) {
        if (b.is_zero()) return std::nullopt;
        return Rat(mpq_class(a.v_ / b.v_));
    }

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    std::string to_string() const { return v_.get_str(); }

private:
    mpq_class v_;
};

} // namespace ci2

#endif
