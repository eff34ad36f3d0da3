#pragma once

#include <cstdint>

namespace maskmat {

// SplitMix64: tiny, seedable, statistically solid for sampling work.
// Counter-mode derivation (seed, index) gives every candidate its own
// stream, so results do not depend on worker scheduling.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) via rejection on the top bits.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = -bound % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }
};

inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (index * 0xd6e8feb86659fd93ull + 0xa5a5a5a5a5a5a5a5ull));
    mix.next();
    return mix;
}

}  // namespace maskmat
