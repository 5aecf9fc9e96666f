#pragma once

#include <cstdint>
#include <random>

namespace ct {

/// Independent stream for (seed, index); seed_seq makes it portable.
inline std::mt19937_64 rng_stream(std::uint64_t seed, std::uint64_t index = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

// Built from raw engine bits so results do not depend on the standard
// library's distribution implementations.
inline double unit_double(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }
inline double uniform(std::mt19937_64& g, double lo, double hi) { return lo + (hi - lo) * unit_double(g); }
inline std::size_t uniform_index(std::mt19937_64& g, std::size_t n) { return static_cast<std::size_t>(g() % n); }

}  // namespace ct
