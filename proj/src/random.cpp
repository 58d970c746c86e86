// random.cpp — Seeded random qubit states

#include "ri/random.hpp"

#include <cmath>
#include <numbers>

namespace ri {

QubitState random_state(SeededGenerator& gen) {
    const double p = gen.uniform();
    const double phase = gen.uniform(0.0, 2.0 * std::numbers::pi);
    const double magnitude = gen.uniform(0.0, std::sqrt(p * (1.0 - p)));
    return {p, std::polar(magnitude, phase)};
}

QubitState random_state(std::uint64_t seed) {
    SeededGenerator gen(seed);
    return random_state(gen);
}

} // namespace ri
