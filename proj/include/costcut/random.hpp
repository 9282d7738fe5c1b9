#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace costcut {

// Seedable random source with a cross-platform reproducible stream.
//
// std::mt19937_64 has a fully specified output sequence, and every value
// transform below is written out explicitly instead of going through the
// implementation-defined <random> distributions. Given the same seed, the
// same calls produce the same values on any conforming platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0, 1) from the top 53 bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, bound). Plain modulo; the bias at 64 bits is
    // far below anything observable and the stream stays reproducible.
    std::uint64_t below(std::uint64_t bound) { return next_u64() % bound; }

    bool bernoulli(double p) { return uniform01() < p; }

    // Fisher-Yates, one below() call per element from the back.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace costcut
