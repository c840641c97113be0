#pragma once

#include "ep/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ep::weights {

/// Eigenvalue exponents of an order-r semisimple element on W: a multiset of
/// residues mod r, omega^0 = 1 counted with multiplicity. F_2-realizable
/// means closed under doubling mod r (Frobenius).
struct ExponentMultiset {
    unsigned r = 3;                 // odd element-order context, >= 3
    std::vector<unsigned> entries;  // residues in [0, r)

    /// Canonical (sorted) copy, for equality and reporting.
    ExponentMultiset canonical() const;
    std::string to_string() const;
};

/// Per-coordinate exponents of a (half-)spin action: coordinate t_i encodes
/// the factor [omega^{t_i}, omega^{-t_i}]. B = full spin (dim 2^n),
/// D = half-spin (dim 2^{n-1}) with an even/odd sign-pattern parity.
struct SpinExponentVector {
    enum class Kind { B, DEven, DOdd };
    unsigned r = 3;
    std::vector<unsigned> t;
    Kind kind = Kind::B;
};

/// True iff the multiset is invariant under e -> 2e mod r.
bool validate_f2_realizable(const ExponentMultiset& e);

/// Number of m-element position-subsets with exponent sum 0 mod r; equals
/// dim C_{Λ^m W}(x). Dynamic programming over residues, exact.
Nat wedge_fixed_dim(const ExponentMultiset& e, unsigned m);

/// B-kind: #{eps in {±1}^n : sum eps_i t_i = 0 mod r}. D-kind: the same count
/// restricted to sign patterns with the given parity of -1 entries.
Nat spin_fixed_dim(const SpinExponentVector& s);

/// Doubling orbits of Z_r: {0} plus the orbits of e -> 2e on nonzero residues,
/// each sorted, listed by minimal element.
std::vector<std::vector<unsigned>> doubling_orbits(unsigned r);

struct MaxWedgeResult {
    bool has_element = false;   // false: no order-r element fits in dimension k
    unsigned max_dim = 0;
    std::vector<ExponentMultiset> witnesses; // canonical, sorted
};

/// Exhaustive maximum of wedge_fixed_dim(·,3) over all F_2-realizable
/// multisets of size k with at least one nonzero entry (order exactly r).
/// r must be one of {7,11,13}; 7 <= k <= 14.
MaxWedgeResult max_wedge_dim_over_order_r(unsigned k, unsigned r);

} // namespace ep::weights
