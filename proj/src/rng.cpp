#include "sandlab/rng.hpp"

#include "sandlab/error.hpp"

namespace sandlab {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

SplittableRng::SplittableRng(std::uint64_t seed) : SplittableRng(StreamKey{splitmix64(seed)}) {}

SplittableRng::SplittableRng(StreamKey key) : key_(key.key), engine_(key.key) {}

SplittableRng SplittableRng::split(std::uint64_t stream) const {
    return SplittableRng(StreamKey{splitmix64(key_ ^ splitmix64(stream + 0x632BE59BD9B4E019ULL))});
}

double SplittableRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

bool SplittableRng::coin(double p) { return uniform() < p; }

std::size_t SplittableRng::pick(std::span<const double> weights) {
    if (weights.empty()) throw InvalidArgument("cannot pick from an empty distribution");
    double total = 0.0;
    for (double w : weights) total += w;
    const double u = uniform() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (u < acc) return i;
    }
    return weights.size() - 1;
}

}  // namespace sandlab
