// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

namespace rds {

/// SplitMix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

/// Counter-based splittable random stream.
///
/// Every output is a pure function of (key, counter), so a stream can be
/// reproduced from its seed alone, and child streams derived via derive()
/// are decorrelated and independent of how much the parent has consumed.
/// Monte-Carlo drivers key one stream per task as derive(task_index).
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : key_(mix64(seed + kGolden)) {}

    RngStream(std::uint64_t seed, std::uint64_t stream)
        : RngStream(RngStream(seed).derive(stream)) {}

    /// Child stream with an independent key; does not advance this stream.
    RngStream derive(std::uint64_t stream) const {
        RngStream child(*this);
        child.key_ = mix64(key_ ^ mix64(stream + 0x632BE59BD9B4E019ull));
        child.counter_ = 0;
        child.has_cached_gaussian_ = false;
        return child;
    }

    std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGolden); }

    /// Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1]; safe as a log() argument.
    double next_unit_pos() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    /// Standard normal via Box-Muller; the second member of each pair is cached.
    double next_gaussian() {
        if (has_cached_gaussian_) {
            has_cached_gaussian_ = false;
            return cached_gaussian_;
        }
        const double u1 = next_unit_pos();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 2.0 * kPi * u2;
        cached_gaussian_ = r * std::sin(phi);
        has_cached_gaussian_ = true;
        return r * std::cos(phi);
    }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
    static constexpr double kPi = 3.14159265358979323846;

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool has_cached_gaussian_ = false;
    double cached_gaussian_ = 0.0;
};

}  // namespace rds
