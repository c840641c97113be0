#pragma once

#include "ep/gf2/subspace.hpp"

#include <span>

namespace ep::gf2 {

/// Left kernel {v : v*a = 0}; ambient dimension is a.rows().
Subspace kernel(const BitMatrix& a);

/// 1-eigenspace of g, i.e. kernel(g + I). Requires g square.
Subspace fixed_space(const BitMatrix& g);

/// Canonical basis of s ∩ t (Zassenhaus-style stacked elimination).
Subspace intersect(const Subspace& s, const Subspace& t);

/// ⋂ fixed_space(g) over gens; the empty list fixes everything.
Subspace common_fixed_space(std::size_t dim, std::span<const BitMatrix> gens);

} // namespace ep::gf2
