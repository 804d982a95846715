#pragma once

#include <cstdint>

namespace boolcube {

// Counter-based deterministic RNG (splitmix64 core). All randomness in the
// library flows through explicit Rng instances; streams derived from the same
// root seed with distinct stream ids are independent and reproducible
// regardless of evaluation order or parallelism.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    // Derive a child stream. Mixing the id through the output function keeps
    // streams with nearby ids uncorrelated.
    Rng split(uint64_t stream_id) const {
        Rng child(mix(state_ + 0x9e3779b97f4a7c15ULL * (stream_id + 1)));
        return child;
    }

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // Uniform integer in [0, bound). Modulo bias is irrelevant at the sizes
    // used here but we reject anyway since it is cheap.
    uint64_t next_below(uint64_t bound) {
        uint64_t threshold = (0ULL - bound) % bound;
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

  private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t state_;
};

}  // namespace boolcube
