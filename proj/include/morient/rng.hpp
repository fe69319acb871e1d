#pragma once

#include <cstdint>

namespace morient {

// Counter-based splitmix64 stream. Small, portable, and byte-for-byte
// reproducible across platforms, which std::uniform_int_distribution is not.
// Every piece of randomness in the library flows through one of these.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    bool next_bool() { return (next() & 1ULL) != 0; }

    // Uniform value in [0, bound). bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound) {
        // rejection sampling keeps the distribution exactly uniform
        std::uint64_t limit = ~0ULL - (~0ULL % bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    int next_int(int bound) { return static_cast<int>(next_below(static_cast<std::uint64_t>(bound))); }

private:
    std::uint64_t state_;
};

}  // namespace morient
