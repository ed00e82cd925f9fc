#pragma once

#include <cstdint>

namespace ybx {

/// splitmix64: the 64-bit splittable generator of Steele, Lea and Flood.
/// Chosen so that reports are bit-reproducible from the seed across
/// implementations; the algorithm is fixed, not a stand-in for std::mt19937.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi] by modular reduction. The reduction
    /// bias is irrelevant here; determinism is the contract.
    long next_in(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// An independent generator split off this one.
    SplitMix64 split() { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

} // namespace ybx
