#pragma once

#include "ep/gf2/bitmatrix.hpp"

#include <span>
#include <vector>

namespace ep::gf2 {

/// Subspace of F_2^n held as a canonical basis: reduced row echelon form with
/// pivot columns strictly ascending. Canonical form makes equality bitwise.
class Subspace {
public:
    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    static Subspace span(std::size_t ambient_dim, std::span<const BitVector> vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BitVector>& basis() const { return basis_; }

    bool contains(const BitVector& v) const;
    /// Image {v*g : v in this}; g must be ambient x m.
    Subspace image(const BitMatrix& g) const;
    /// All 2^dim elements; guarded to dim <= 24.
    std::vector<BitVector> enumerate() const;

    bool operator==(const Subspace& other) const = default;

private:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    std::size_t ambient_;
    std::vector<BitVector> basis_;
};

} // namespace ep::gf2
