#pragma once

#include <cstdint>
#include <random>

namespace lklab {

// Seedable random source: mt19937_64 with rejection-sampled bounded draws,
// so sequences depend only on the seed, not on the standard library's
// distribution internals. Every experiment report records the seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), eng_(seed) {}

    uint64_t seed() const { return seed_; }

    uint64_t next_u64() { return eng_(); }

    // Uniform in [0, bound), bound >= 1. Rejection sampling keeps the
    // distribution exactly uniform and the stream reproducible.
    int below(int bound);

    // Derived per-item stream (seed, item index) for order-independent
    // parallel trials: splitmix64 of the pair.
    static uint64_t derive_stream(uint64_t seed, uint64_t item);

private:
    uint64_t seed_;
    std::mt19937_64 eng_;
};

} // namespace lklab
