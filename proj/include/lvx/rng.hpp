#pragma once

#include <cmath>
#include <cstdint>

namespace lvx {

/// Counter-based splitmix64 stream. The same seed yields the same draw
/// sequence on every platform, so trained parameters are reproducible bit
/// for bit. Copying an Rng freezes the stream at its current position.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_unit();
    }

    /// Standard normal via Box-Muller; consumes exactly two raw draws.
    double next_normal() {
        // u1 in (0, 1] so the log stays finite.
        double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
        double u2 = next_unit();
        constexpr double two_pi = 6.283185307179586476925286766559;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    /// Uniform integer in [0, bound); bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<__uint128_t>(next_u64()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

} // namespace lvx
