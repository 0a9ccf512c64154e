#pragma once

#include <cstdint>
#include <random>

namespace digadget {

// Seed derivation and bounded draws that give the same sequence on every
// platform. std::mt19937_64 is fully specified by the standard; the
// distributions are not, so bounded draws are done by hand.

/// SplitMix64 finalizer. Used to derive independent seeds from (seed, tag).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) noexcept
{
    return mix64(seed ^ mix64(tag));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    bool coin() { return (engine_() >> 63) != 0; }

    /// Uniform in [0, bound). `bound` must be positive.
    std::uint64_t below(std::uint64_t bound)
    {
        // Rejection sampling on the largest multiple of bound.
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v > limit);
        return v % bound;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace digadget
