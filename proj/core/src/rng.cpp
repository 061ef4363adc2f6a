#include "lklab/rng.hpp"

#include "lklab/errors.hpp"

namespace lklab {

int Rng::below(int bound)
{
    if (bound < 1)
        throw InvalidParameters("Rng::below: bound must be >= 1");
    const uint64_t b = static_cast<uint64_t>(bound);
    const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % b + 1) % b;
    uint64_t x;
    do {
        x = eng_();
    } while (x > limit);
    return static_cast<int>(x % b);
}

uint64_t Rng::derive_stream(uint64_t seed, uint64_t item)
{
    // splitmix64 over the combined word
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (item + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace lklab
