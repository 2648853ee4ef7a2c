#include "rcusum/rng.hpp"

namespace rcusum::sim {

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t scenario, std::uint64_t replicate) noexcept {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ splitmix64(scenario + 0x632be59bd9b4e019ULL));
    h = splitmix64(h ^ splitmix64(replicate + 0x85157af5ULL));
    return h;
}

Rng substream(std::uint64_t seed, std::uint64_t scenario, std::uint64_t replicate) {
    std::seed_seq seq{static_cast<std::uint32_t>(substream_seed(seed, scenario, replicate)),
                      static_cast<std::uint32_t>(substream_seed(seed, scenario, replicate) >> 32)};
    return Rng(seq);
}

}  // namespace rcusum::sim
