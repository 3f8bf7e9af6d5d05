#ifndef E8CAS_RNG_HPP
#define E8CAS_RNG_HPP

#include "e8cas/rat.hpp"

#include <cstdint>

namespace e8cas {

/// Deterministic, platform-independent PRNG (splitmix64). Used for the
/// seeded "random rational point" draws so verification runs are
/// reproducible bit-for-bit across machines and thread counts.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n); n must be positive. Modulo bias is irrelevant
    /// for test-point generation.
    uint64_t below(uint64_t n) { return next() % n; }

    /// Uniform integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

private:
    uint64_t state_;
};

/// Uniform rational with |numerator| <= max_num and denominator in [1, max_den].
inline Rat random_rat(SplitMix64& rng, long max_num = 999, long max_den = 999) {
    long num = rng.range(-max_num, max_num);
    long den = rng.range(1, max_den);
    return Rat(num, den);
}

} // namespace e8cas

#endif
