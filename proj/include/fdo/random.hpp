#pragma once

#include <cstdint>
#include <random>

namespace fdo {

inline constexpr std::uint64_t kDefaultSeed = 1;

/// Seeded generator with reproducible substreams.
///
/// Wraps std::mt19937_64, whose output sequence is fixed by the standard, and
/// converts to [0,1) by hand because the standard distributions are not
/// portable across library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : Rng(make_seq(seed, 0, 0)) {}

    /// Independent stream for (seed, stream, tag); e.g. subgraph i of a build.
    static Rng stream(std::uint64_t seed, std::uint64_t stream, std::uint64_t tag = 0) {
        return Rng(make_seq(seed, stream + 1, tag));
    }

    std::uint64_t next() { return engine_(); }
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return p >= 1.0 || uniform() < p; }
    /// Uniform integer in [lo, hi] by rejection.
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi);

private:
    explicit Rng(std::seed_seq seq) : engine_(seq) {}
    static std::seed_seq make_seq(std::uint64_t seed, std::uint64_t stream, std::uint64_t tag) {
        return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                             static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                             static_cast<std::uint32_t>(tag)};
    }

    std::mt19937_64 engine_;
};

inline std::uint64_t Rng::between(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return next();
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return lo + x % span;
}

}  // namespace fdo
