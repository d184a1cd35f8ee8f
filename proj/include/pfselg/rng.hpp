#pragma once

#include "pfselg/modmath.hpp"

#include <cstdint>
#include <random>

namespace pfselg {

// Seedable generator behind every random key and nonce draw. The update is
// splitmix64 and the big-integer draw protocol is pinned (see README), so a
// given seed produces the same values in any conforming implementation.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by masked rejection: draw ceil(bits/64) words
    // big-endian, mask down to bit_length(bound) bits, retry on overshoot.
    Int uniform_below(const Int& bound) {
        if (bound < 1) throw Error("uniform_below: bound must be positive");
        unsigned bits = msb(bound) + 1;
        unsigned words = (bits + 63) / 64;
        Int mask = (Int(1) << bits) - 1;
        for (;;) {
            Int v = 0;
            for (unsigned w = 0; w < words; ++w) v = (v << 64) | next();
            v &= mask;
            if (v < bound) return v;
        }
    }

    // Uniform in [lo, hi).
    Int uniform_in(const Int& lo, const Int& hi) {
        if (lo >= hi) throw Error("uniform_in: empty range");
        return lo + uniform_below(hi - lo);
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t entropy_seed() {
    std::random_device rd;
    return (std::uint64_t(rd()) << 32) ^ rd();
}

}  // namespace pfselg
