#pragma once

#include <cstdint>
#include <random>

namespace eqaoa {

/**
 * Seeded 64-bit stream used for every random draw in the library.
 *
 * Raw words come from std::mt19937_64, whose output sequence is fixed by
 * the C++ standard. Bounded draws use rejection on the raw word instead of
 * std::uniform_int_distribution so instances are reproducible across
 * standard library implementations.
 */
class Rng {
  public:
    static constexpr const char *kName = "mt19937_64";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, bound), bound >= 1. Words below
    // (2^64 mod bound) are rejected, then reduced modulo bound.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            const std::uint64_t x = engine_();
            if (x >= threshold) {
                return x % bound;
            }
        }
    }

    // Uniform double in [0, 1) from the top 53 bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 engine_;
};

} // namespace eqaoa
