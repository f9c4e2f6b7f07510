#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace sandlab {

std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic, splittable generator. The byte stream depends only on the
/// seed and the split path, never on the standard library implementation:
/// mt19937_64 is fully specified, and all derived draws below use its raw
/// output directly.
class SplittableRng {
public:
    static constexpr std::string_view kAlgorithm = "mt19937_64/splitmix64-streams/v1";

    explicit SplittableRng(std::uint64_t seed);

    /// Independent child stream; the parent is not advanced.
    SplittableRng split(std::uint64_t stream) const;

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform();
    /// True with probability p.
    bool coin(double p);
    /// Index i drawn with probability weights[i] / sum(weights).
    std::size_t pick(std::span<const double> weights);

private:
    struct StreamKey {
        std::uint64_t key;
    };
    explicit SplittableRng(StreamKey key);

    std::uint64_t key_;
    std::mt19937_64 engine_;
};

}  // namespace sandlab
