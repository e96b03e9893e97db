#pragma once

#include <cstdint>
#include <random>

#include "linrel/relation.hpp"

namespace linrel {

// Deterministic RNG wrapper. mt19937_64 is fully specified by the
// standard and the rejection sampler below avoids the library-defined
// distributions, so identical seeds give identical instances everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Unbiased draw from [0, n).
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::logic_error("Rng::below(0)");
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

private:
    std::mt19937_64 engine_;
};

// Over GF(p): a uniformly random subspace of the given dimension, found by
// rejection (uniform generator matrices hit every rank-d subspace equally
// often). Over Q: `dim` generator rows with entries drawn from -2..2,
// canonicalized, so the resulting dimension may be smaller.
Subspace random_subspace(Rng& rng, const FieldSpec& field, std::size_t ambient, std::size_t dim);

// Graph dimension uniform in 0..dom_dim+cod_dim, then a random graph of
// that dimension as above.
LinearRelation random_relation(Rng& rng, const FieldSpec& field, std::size_t dom_dim,
                               std::size_t cod_dim);

} // namespace linrel
