#pragma once

#include <cstdint>

namespace scat {

/// SplitMix64 generator.  Used for every random draw in the library so that
/// results are reproducible across platforms and standard-library versions
/// (std::uniform_real_distribution is implementation-defined).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Derive an independent per-trial stream: the trial index is folded
    /// into the seed through the SplitMix64 mixer itself.
    static SplitMix64 substream(std::uint64_t base_seed, std::uint64_t index) {
        SplitMix64 mixer(base_seed + 0x632BE59BD9B4E019ULL * (index + 1));
        return SplitMix64(mixer.next_u64());
    }

private:
    std::uint64_t state_;
};

/// Standard normal pair via Box-Muller on SplitMix64 uniforms.
inline void normal_pair(SplitMix64& rng, double& g1, double& g2) {
    double u1 = rng.uniform01();
    while (u1 <= 0.0) u1 = rng.uniform01();
    const double u2 = rng.uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.28318530717958647692 * u2;
    g1 = r * std::cos(a);
    g2 = r * std::sin(a);
}

}  // namespace scat
