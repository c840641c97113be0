#pragma once

#include "ep/engine/records.hpp"

#include <utility>
#include <vector>

namespace ep::engine {

/// Counting bound: if (2^floor(d/2)-1) * alpha < 2^d-1 then notEP, with the
/// instantiated inequality as certificate; otherwise inconclusive.
Verdict corollary_check(const Nat& alpha, std::size_t d);

/// Refined bound: parts are (cap_dim, count) pairs; computes the exact sum
/// of (2^cap-1)*count and compares with 2^d-1.
Verdict refined_bound_check(const std::vector<std::pair<std::size_t, Nat>>& parts,
                            std::size_t d);
Nat refined_bound_sum(const std::vector<std::pair<std::size_t, Nat>>& parts);

/// Gaussian binomial [n over m]_2: the number of m-dimensional subspaces of
/// F_2^n; exact via the stepwise-integral product formula.
Nat gaussian_binomial(std::size_t n, std::size_t m);

} // namespace ep::engine
