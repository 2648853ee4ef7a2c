#pragma once

#include <cstdint>
#include <random>

namespace rcusum::sim {

/// Generator used by every sampler: 64-bit Mersenne Twister.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer; a bijective 64-bit mix.
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed of the independent stream for (seed, scenario, replicate). Streams
/// depend only on these indices, never on scheduling.
[[nodiscard]] std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t scenario,
                                           std::uint64_t replicate) noexcept;

[[nodiscard]] Rng substream(std::uint64_t seed, std::uint64_t scenario, std::uint64_t replicate);

}  // namespace rcusum::sim
