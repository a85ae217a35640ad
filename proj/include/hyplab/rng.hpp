#pragma once

#include <cstdint>

namespace hyplab {

// Counter-based generator built on the SplitMix64 finalizer
// (constants from Steele, Lea & Flood's SplittableRandom).
//
// Output i of stream s under master seed m is
//     mix(key(m, s) + (i+1) * GAMMA)
// so any (seed, stream) pair names a reproducible sequence and
// independent trials can draw from disjoint streams in parallel.
class CounterRng {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(mix(seed + kGamma) ^ mix(stream * kGamma + 0x6A09E667F3BCC909ull))) {}

    std::uint64_t next() { return mix(key_ + (++counter_) * kGamma); }

    // Uniform in [0,1), 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n), rejection sampled so every value is equally likely.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace hyplab
