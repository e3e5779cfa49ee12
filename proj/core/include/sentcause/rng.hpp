#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace sentcause {

/// Deterministic, platform-independent random source.
///
/// The standard library's engines are portable but its distributions and
/// std::shuffle are implementation-defined, so every derived draw here is
/// spelled out explicitly and frozen:
///
///   next():      splitmix64 (Steele, Lea & Flood 2014)
///   uniform01(): (next() >> 11) * 2^-53                 in [0, 1)
///   normal():    Box-Muller, z = sqrt(-2 ln u1) * cos(2 pi u2),
///                u1 in (0, 1] drawn as ((next() >> 11) + 1) * 2^-53
///   below(n):    masked rejection sampling (unbiased)
///   shuffle():   Fisher-Yates, descending index, using below()
///
/// Identical seeds therefore produce identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Standard normal deviate. One deviate per call; each call consumes
    /// exactly two raw draws (the sine branch is discarded).
    double normal() {
        const double u1 = (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = static_cast<double>(next() >> 11) * 0x1.0p-53;
        constexpr double two_pi = 6.283185307179586476925286766559;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t mask = n - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        std::uint64_t draw;
        do {
            draw = next() & mask;
        } while (draw >= n);
        return draw;
    }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            using std::swap;
            swap(items[i - 1], items[j]);
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace sentcause
