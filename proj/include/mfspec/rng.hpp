#ifndef MFSPEC_RNG_HPP
#define MFSPEC_RNG_HPP

#include <cstdint>

namespace mfspec {

/// Identifies one reproducible sample path: identical (seed, stream)
/// pairs produce identical draws on every platform.
struct SamplerSeed {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

/// 64-bit finalizing mix (MurmurHash3 fmix64).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 33;
    z *= 0xff51afd7ed558ccdULL;
    z ^= z >> 33;
    z *= 0xc4ceb9fe1a85ec53ULL;
    z ^= z >> 33;
    return z;
}

/// Counter-based generator: the k-th draw is a pure function of
/// (seed, stream, k), so paths can be sampled in any order or in
/// parallel without shared state.
class CounterRng {
public:
    explicit CounterRng(SamplerSeed s) noexcept
        : base_(mix64(s.seed ^ 0x9e3779b97f4a7c15ULL) ^
                mix64(s.stream + 0xbf58476d1ce4e5b9ULL)) {}

    std::uint64_t word(std::uint64_t counter) const noexcept {
        return mix64(base_ + counter * 0x9e3779b97f4a7c15ULL);
    }

    /// Uniform draw in [0, 1) with 53 random bits.
    double uniform(std::uint64_t counter) const noexcept {
        return static_cast<double>(word(counter) >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t base_;
};

}  // namespace mfspec

#endif
