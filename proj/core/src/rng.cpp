#include "narranet/rng.hpp"

#include <cmath>
#include <limits>

#include "narranet/errors.hpp"

namespace narranet {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) : engine_(seed) {}

RandomStream RandomStream::child(std::uint64_t base_seed, std::uint64_t index) {
    // (index + 1) keeps child 0 distinct from a parent seeded directly.
    return RandomStream(splitmix64(base_seed + (index + 1) * 0x9E3779B97F4A7C15ULL));
}

std::uint64_t RandomStream::next_u64() {
    return engine_();
}

double RandomStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::size_t RandomStream::uniform_below(std::size_t n) {
    if (n == 0) {
        throw Error("uniform_below(0)");
    }
    const std::uint64_t span = n;
    // Reject draws from the incomplete final block to stay unbiased.
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() / span * span;
    std::uint64_t x = next_u64();
    while (x >= limit) {
        x = next_u64();
    }
    return static_cast<std::size_t>(x % span);
}

bool RandomStream::bernoulli(double p) {
    return uniform01() < p;
}

namespace {

// Inversion by sequential search. Safe only while exp(-lambda) is far from
// the subnormal range, hence the chunking in RandomStream::poisson.
std::uint64_t poisson_small(double lambda, RandomStream& rng) {
    if (lambda <= 0.0) {
        return 0;
    }
    const double u = rng.uniform01();
    double p = std::exp(-lambda);
    double cum = p;
    std::uint64_t k = 0;
    // u < 1, so the loop terminates in theory too; the cap guards against
    // accumulated rounding in the tail.
    const std::uint64_t cap =
        static_cast<std::uint64_t>(lambda + 20.0 * std::sqrt(lambda) + 100.0);
    while (u >= cum && k < cap) {
        ++k;
        p *= lambda / static_cast<double>(k);
        cum += p;
    }
    return k;
}

}  // namespace

std::uint64_t RandomStream::poisson(double lambda) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw Error("poisson rate must be finite and non-negative");
    }
    std::uint64_t total = 0;
    while (lambda > 30.0) {
        total += poisson_small(30.0, *this);
        lambda -= 30.0;
    }
    return total + poisson_small(lambda, *this);
}

}  // namespace narranet
