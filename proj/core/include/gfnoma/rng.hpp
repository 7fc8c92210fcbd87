#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace gfnoma {

// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

// Seed of the Monte Carlo substream `index` under a master seed.
// For fixed master the map index -> master + (index+1)*GAMMA is a bijection
// mod 2^64 (GAMMA is odd), and mix64 is a bijection, so substream seeds never
// collide across trial indices. Plain integer arithmetic: identical on every
// platform.
constexpr std::uint64_t substream_seed(std::uint64_t master_seed,
                                       std::uint64_t trial_index) noexcept {
    constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
    return mix64(master_seed + (trial_index + 1) * kGamma);
}

// xoshiro256++ with splitmix64 state expansion. Used instead of <random>
// engines because the distribution helpers below must produce bit-identical
// streams across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept {
        std::uint64_t z = seed;
        constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
        for (auto& word : state_) {
            z += kGamma;
            word = mix64(z);
        }
    }

    std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer on [0, bound) by rejection; unbiased.
    std::uint64_t uniform_below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Exp(1) via inverse CDF; argument of log is in (0, 1].
    double exp1() noexcept { return -std::log(1.0 - uniform01()); }

    // Standard normal, Box-Muller.
    double normal() noexcept {
        const double u1 = 1.0 - uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    // Circularly-symmetric complex Gaussian with E|h|^2 = 1.
    std::complex<double> cnormal() noexcept {
        const double u1 = 1.0 - uniform01();
        const double u2 = uniform01();
        const double radius = std::sqrt(-std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

inline Rng substream_rng(std::uint64_t master_seed, std::uint64_t trial_index) noexcept {
    return Rng(substream_seed(master_seed, trial_index));
}

}  // namespace gfnoma
