#pragma once

#include <cstdint>

#include "panofield/vec.hpp"

namespace panofield {

// splitmix64 finalizer; the basis for all seeded randomness in the pipeline.
// Hand-rolled so results do not depend on standard library internals.
constexpr uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

constexpr uint64_t hash_combine(uint64_t a, uint64_t b) {
    return mix64(a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2)));
}

// Uniform double in [0, 1) from a hash key.
inline double hash01(uint64_t key) {
    return static_cast<double>(mix64(key) >> 11) * 0x1.0p-53;
}

class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // [0, 1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Unbiased enough for sampling work at these ranges.
    uint64_t next_below(uint64_t n) { return static_cast<uint64_t>(next_double() * static_cast<double>(n)); }

    // Uniform in the closed ball of given radius (rejection from the cube).
    Vec3 in_ball(double radius) {
        for (;;) {
            Vec3 p{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
            if (p.squared_norm() <= 1.0) return p * radius;
        }
    }

    // Standard normal via Box-Muller.
    double normal() {
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 1e-300) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

  private:
    uint64_t state_;
};

}  // namespace panofield
