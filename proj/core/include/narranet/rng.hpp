#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace narranet {

// SplitMix64 finalizer; bijective on 64-bit values.
std::uint64_t splitmix64(std::uint64_t x);

// Deterministic random stream around std::mt19937_64 (whose output sequence
// the standard pins down exactly, so draws are bit-identical across
// platforms). All distribution draws are implemented here rather than with
// std::*_distribution, whose algorithms are implementation-defined.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    // Stream for replicate `index` of a run seeded with `base_seed`.
    // Counter-style derivation: any replicate can be reproduced in isolation
    // and the assignment of replicates to threads cannot matter.
    static RandomStream child(std::uint64_t base_seed, std::uint64_t index);

    std::uint64_t next_u64();

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01();

    // Unbiased uniform integer in [0, n); n must be >= 1. Uses rejection, so
    // the number of raw draws consumed is itself random (but deterministic
    // for a given stream state).
    std::size_t uniform_below(std::size_t n);

    bool bernoulli(double p);

    // Poisson draw. Inversion by sequential search for small rates; larger
    // rates are decomposed into independent Poisson chunks with rate <= 30
    // whose sum is exactly Poisson(lambda). No approximation involved.
    std::uint64_t poisson(double lambda);

private:
    std::mt19937_64 engine_;
};

}  // namespace narranet
