// random.hpp — Reproducible random numbers for seeded runs
//
// std::uniform_real_distribution is implementation-defined, so uniforms are built
// directly from the 53 high bits of a 64-bit Mersenne Twister draw. Identical seeds
// give bit-identical streams on every conforming platform.

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "ri/model.hpp"

namespace ri {

class SeededGenerator {
public:
    static constexpr std::string_view kAlgorithm = "mt19937_64/u53";

    explicit SeededGenerator(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

// SplitMix64 finaliser; derives independent sub-seeds from one user seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// p ~ U(0,1), phase ~ U(0, 2 pi), |c| ~ U(0, sqrt(p(1-p))).
QubitState random_state(SeededGenerator& gen);
QubitState random_state(std::uint64_t seed);

} // namespace ri
