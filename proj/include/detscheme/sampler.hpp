#pragma once

#include <cstdint>
#include <random>

#include "detscheme/polynomial.hpp"

namespace detscheme {

/// Seeded coefficient source. Over QQ: integers in [-bound, bound]; over
/// F_p: uniform residues. Uses mt19937_64 with plain modulo reduction so
/// streams are identical across standard libraries.
class Sampler {
public:
    explicit Sampler(Field field, std::uint64_t seed, int bound = 10) : field_(field), rng_(seed), bound_(bound) {}

    FieldElement coefficient();
    /// Nonzero coefficient.
    FieldElement unit();
    /// Dense random form of the given degree (zero for negative degree).
    Polynomial form(const RingPtr& ring, int degree);
    std::uint64_t raw() { return rng_(); }

private:
    Field field_;
    std::mt19937_64 rng_;
    int bound_;
};

}  // namespace detscheme
