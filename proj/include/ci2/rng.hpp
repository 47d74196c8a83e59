#ifndef CI2_RNG_HPP
#define CI2_RNG_HPP

#include <cstdint>
#include <random>

#include "ci2/fp.hpp"
#include "ci2/rational.hpp"

namespace ci2 {

// All randomness in the project flows through one of these, seeded
// explicitly.  Independent trials derive their own stream from
// (seed, trial) so results do not depend on scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
        // splitmix-style mix keeps per-trial streams decorrelated
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

    long uniform(long lo, long hi) {  // inclusive
        return std::uniform_int_distribution<long>(lo, hi)(g_);
    }
    bool coin() { return uniform(0, 1) == 1; }

    std::mt19937_64& gen() { return g_; }

private:
    std::mt19937_64 g_;
};

inline Rat random_element(const Rat::Ctx&, Rng& rng) {
    return Rat(rng.uniform(-9, 9), 1);
}
inline Fp random_element(const Fp::Ctx& c, Rng& rng) {
    return Fp(rng.uniform(0, c.p - 1), c.p);
}

template <class K>
K random_nonzero(const typename K::Ctx& c, Rng& rng) {
    for (int i = 0; i < 1000; ++i) {
        K x = random_element(c, rng);
        if (!x.is_zero()) return x;
    }
    throw DomainError("could not sample a nonzero element");
}

} // namespace ci2

#endif
