#pragma once

#include <cstdint>

namespace cubicver {

// splitmix64, fixed forever so that seeded runs are reproducible across
// platforms and releases. Do not swap in std::mt19937 or anything else whose
// stream the standard leaves unpinned.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection, so the distribution is exact and the
    // draw count is deterministic given the stream.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % n;
    }

    // Uniform integer in [-bound, bound].
    long long symmetric(long long bound) {
        return static_cast<long long>(below(2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
    }
};

} // namespace cubicver
