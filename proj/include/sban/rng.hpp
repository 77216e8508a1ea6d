#pragma once

// Deterministic randomness. Everything random in this project flows from an
// explicit 64-bit seed through splitmix64, so identical seeds give identical
// artifacts on every platform. std::mt19937 is avoided on purpose: the
// distributions in <random> are not pinned across standard library vendors.

#include <cstdint>

namespace sban {

struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v > limit);
        return v % bound;
    }

};

// Stream for item `salt` under a master seed. Pure function of its inputs,
// so per-item randomness does not depend on visitation order.
inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t salt) {
    SplitMix64 scramble(seed ^ (salt * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull));
    return SplitMix64(scramble.next());
}

} // namespace sban
