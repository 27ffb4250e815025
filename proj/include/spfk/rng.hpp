#pragma once

#include <cstdint>

namespace spfk {

/// SplitMix64. Small, portable, and its output sequence is fixed across
/// standard libraries, unlike the std distributions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    /// Independent stream number `index` of a base seed.
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) noexcept {
        SplitMix64 mixer(seed ^ (0x6a09e667f3bcc909ULL * (index + 1)));
        return SplitMix64(mixer.next() + index);
    }

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound), bound > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
        while (true) {
            const std::uint64_t r = next();
            if (r >= limit) return r % bound;
        }
    }

    /// Uniform double in [0, 1).
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace spfk
