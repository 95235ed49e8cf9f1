#pragma once

#include <cstdint>
#include <random>

namespace qse {

// Independent, reproducible stream per (seed, trial): the generator state is
// derived by splitmix64 so trials can run concurrently in any order.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
    auto mix = [](std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return std::mt19937_64(mix(mix(x) + 0x9e3779b97f4a7c15ULL));
}

}  // namespace qse
