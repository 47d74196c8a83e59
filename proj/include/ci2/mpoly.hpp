#ifndef CI2_MPOLY_HPP
#define CI2_MPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ci2/errors.hpp"

namespace ci2 {

// Sparse multivariate polynomial ring K[x_0..x_{n-1}], used as a
// coefficient domain for the universal-coefficient runs where the
// inputs f^(M), g^(M) stay symbolic.  Monomials ordered lex.
template <class K>
class MPoly {
public:
    using Mono = std::vector<int>;

    struct Ctx {
        int nvars = 0;
        std::vector<std::string> names;  // optional, for printing
        typename K::Ctx base;
    };

    MPoly() = default;
    explicit MPoly(Ctx c) : ctx_(std::move(c)) {}

    static MPoly zero(const Ctx& c) { return MPoly(c); }
    static MPoly one(const Ctx& c) { return constant(K::one(c.base), c); }
    static MPoly from_int(long n, const Ctx& c) { return constant(K::from_int(n, c.base), c); }
    static MPoly constant(const K& k, const Ctx& c) {
        MPoly r(c);
        if (!k.is_zero()) r.t_[Mono(c.nvars, 0)] = k;
        return r;
    }
    static MPoly var(int i, const Ctx& c) {
        MPoly r(c);
        Mono m(c.nvars, 0);
        m[i] = 1;
        r.t_[m] = K::one(c.base);
        return r;
    }
    static constexpr bool is_field = false;
    static long characteristic(const Ctx& c) { return K::characteristic(c.base); }

    const Ctx& ctx() const { return ctx_; }
    bool is_zero() const { return t_.empty(); }
    bool is_one() const {
        return t_.size() == 1 && t_.begin()->second.is_one() && degree_of(t_.begin()->first) == 0;
    }
    std::size_t term_count() const { return t_.size(); }
    const std::map<Mono, K>& terms() const { return t_; }

    MPoly operator-() const {
        MPoly r(ctx_);
        for (const auto& [m, c] : t_) r.t_[m] = -c;
        return r;
    }
    MPoly operator+(const MPoly& o) const {
        MPoly r = *this;
        if (r.t_.empty()) r.ctx_ = o.pick_ctx(*this);
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
    MPoly operator-(const MPoly& o) const { return *this + (-o); }
    MPoly operator*(const MPoly& o) const {
        MPoly r(pick_ctx(o));
        for (const auto& [m1, c1] : t_)
            for (const auto& [m2, c2] : o.t_) {
                Mono m = m1;
                for (std::size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
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
    MPoly& operator+=(const MPoly& o) { *this = *this + o; return *this; }
    MPoly& operator-=(const MPoly& o) { *this = *this - o; return *this; }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
    bool operator==(const MPoly& o) const { return t_ == o.t_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // Exact division by leading-term elimination.  If a = q*b exactly,
    // lex leading terms multiply, so the greedy loop always succeeds;
    // any failure certifies the quotient does not exist.
    static std::optional<MPoly> exact_div(const MPoly& a, const MPoly& b) {
        if (b.is_zero()) return std::nullopt;
        MPoly r = a, q(a.pick_ctx(b));
        auto bl = b.t_.rbegin();  // lex-largest term
        while (!r.is_zero()) {
            auto rl = r.t_.rbegin();
            Mono m = rl->first;
            bool divisible = true;
            for (std::size_t i = 0; i < m.size(); ++i) {
                m[i] -= bl->first[i];
                if (m[i] < 0) { divisible = false; break; }
            }
            if (!divisible) return std::nullopt;
            auto c = K::exact_div(rl->second, bl->second);
            if (!c) return std::nullopt;
            MPoly term(q.ctx_);
            term.t_[m] = *c;
            q += term;
            r -= term * b;
        }
        return q;
    }

    // Full evaluation at a point of another domain K2 (values per variable).
    template <class K2>
    K2 eval(const std::vector<K2>& vals, const typename K2::Ctx& c2) const {
        K2 acc = K2::zero(c2);
        for (const auto& [m, c] : t_) {
            K2 term = inject<K2>(c, c2);
            for (std::size_t i = 0; i < m.size(); ++i)
                for (int e = 0; e < m[i]; ++e) term = term * vals[i];
            acc = acc + term;
        }
        return acc;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, degree_of(m));
        return d;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (const auto& [m, c] : t_) {
            if (!s.empty()) s += " + ";
            s += c.to_string();
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                s += "*" + name(static_cast<int>(i));
                if (m[i] > 1) s += "^" + std::to_string(m[i]);
            }
        }
        return s;
    }

private:
    template <class K2>
    static K2 inject(const K& c, const typename K2::Ctx& c2) {
        if constexpr (std::is_same_v<K2, K>) {
            (void)c2;
            return c;
        } else {
            // only used for same-domain evaluation in this project
            static_assert(std::is_same_v<K2, K>, "cross-domain eval not supported");
            return K2::zero(c2);
        }
    }
    static int degree_of(const Mono& m) {
        int d = 0;
        for (int e : m) d += e;
        return d;
    }
    std::string name(int i) const {
        if (i < static_cast<int>(ctx_.names.size())) return ctx_.names[i];
        return "x" + std::to_string(i);
    }
    Ctx pick_ctx(const MPoly& o) const { return t_.empty() && !o.t_.empty() ? o.ctx_ : ctx_; }

    std::map<Mono, K> t_;
    Ctx ctx_;
};

} // namespace ci2

#endif
