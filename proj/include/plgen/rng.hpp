#ifndef PLGEN_RNG_HPP
#define PLGEN_RNG_HPP

#include <cstdint>

namespace plgen {

/// Finalizer step of the splitmix64 generator. Used both as the output mix
/// and to derive independent substream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// splitmix64: state advances by the 64-bit golden gamma, outputs are the
/// mixed state. The exact update is pinned in docs/determinism.md; every
/// random decision in the synthesizer flows through this generator so that
/// bundles are reproducible bit-for-bit across platforms.
class SplitMix64 {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return mix64(state_ += kGamma); }

    /// Uniform double in [0, 1): top 53 bits of next() scaled by 2^-53.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). Requires n >= 1.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(uniform01() * static_cast<double>(n));
    }

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(double p) { return uniform01() < p; }

private:
    std::uint64_t state_;
};

/// Seed for the k-th independent substream of a scene seed.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t k) {
    return SplitMix64(mix64(seed + SplitMix64::kGamma * (k + 1)));
}

} // namespace plgen

#endif
