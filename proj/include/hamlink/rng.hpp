#pragma once

#include <cstdint>

namespace hamlink {

// SplitMix64: the fixed, portable pseudo-random source used by all seeded
// generators in this project. Identical seeds produce identical streams on
// every platform; split() derives an independent stream so parallel test
// shards stay reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    SplitMix64 split() { return SplitMix64(next() ^ 0x5851f42d4c957f2dULL); }

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Bernoulli with the given probability.
    bool chance(double p) {
        if (p <= 0) return false;
        if (p >= 1) return true;
        return (next() >> 11) * 0x1.0p-53 < p;
    }

private:
    std::uint64_t state_;
};

}  // namespace hamlink
