#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>
#include <vector>

namespace hypervel {

/// SplitMix64 (Steele, Lea and Flood). Used only to expand a 64-bit seed
/// into generator state; fully specified by the algorithm, so streams are
/// identical across platforms and standard libraries.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

/// xoshiro256++ (Blackman and Vigna), seeded through SplitMix64.
class Xoshiro256pp {
  public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& word : s_) word = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Standard normal deviate (Box-Muller; consumes two draws).
    double normal() {
        const double u1 = 1.0 - uniform01(); // in (0, 1], keeps the log finite
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Uniformly distributed direction on the unit sphere in R^dim.
    std::vector<double> unit_vector(std::size_t dim) {
        std::vector<double> v(dim);
        double norm_sq = 0.0;
        do {
            norm_sq = 0.0;
            for (auto& x : v) {
                x = normal();
                norm_sq += x * x;
            }
        } while (norm_sq == 0.0);
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (auto& x : v) x *= inv;
        return v;
    }

    /// Random vector with the given norm: magnitude * random direction.
    std::vector<double> vector_with_norm(std::size_t dim, double magnitude) {
        std::vector<double> v = unit_vector(dim);
        for (auto& x : v) x *= magnitude;
        return v;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> s_;
};

/// FNV-1a 64-bit hash; stable across platforms.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Derives an independent, reproducible stream for one named property law
/// from the run seed: the seed is scrambled once and xor-combined with the
/// hash of the law name before state expansion.
inline Xoshiro256pp law_stream(std::uint64_t seed, std::string_view law_name) {
    const std::uint64_t scrambled = SplitMix64(seed).next();
    return Xoshiro256pp(scrambled ^ fnv1a64(law_name));
}

} // namespace hypervel
