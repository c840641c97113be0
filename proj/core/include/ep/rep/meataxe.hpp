#pragma once

#include "ep/gf2/ops.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ep::rep {

struct MeatAxeOptions {
    std::uint64_t seed = 0;     // randomized phase is seeded and reproducible
    unsigned random_attempts = 64;
};

struct MeatAxeResult {
    bool irreducible = false;
    /// On reducible: a proper nonzero invariant subspace as certificate.
    std::optional<gf2::Subspace> invariant;
};

/// Smallest subspace containing v and closed under all generators.
gf2::Subspace spin(const gf2::BitVector& v, const std::vector<gf2::BitMatrix>& gens);

/// MeatAxe irreducibility test over F_2. Random algebra elements with
/// Norton's criterion decide both directions; after the bounded random phase
/// a deterministic fallback spins every standard basis vector and every
/// kernel vector of tried elements, then sweeps algebra elements
/// systematically. Throws ep::data_error on a non-invertible generator.
MeatAxeResult meataxe_analyze(const std::vector<gf2::BitMatrix>& gens,
                              const MeatAxeOptions& opts = {});

bool is_irreducible(const std::vector<gf2::BitMatrix>& gens,
                    const MeatAxeOptions& opts = {});

} // namespace ep::rep
