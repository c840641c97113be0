#include "ep/gf2/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace ep::gf2 {

namespace {

// Reduce a spanning set to the canonical RREF basis, pivots ascending.
std::vector<BitVector> rref(std::size_t ambient, std::span<const BitVector> vectors) {
    std::vector<BitVector> rows;
    for (const auto& v : vectors) {
        if (v.length() != ambient)
            throw std::invalid_argument("Subspace: ambient dimension mismatch");
        BitVector w = v;
        for (const auto& b : rows) {
            int p = b.lowest_set();
            if (p >= 0 && w.get(static_cast<std::size_t>(p)))
                w ^= b;
        }
        if (w.is_zero())
            continue;
        int p = w.lowest_set();
        for (auto& b : rows)
            if (b.get(static_cast<std::size_t>(p)))
                b ^= w;
        rows.push_back(std::move(w));
    }
    std::sort(rows.begin(), rows.end(),
              [](const BitVector& a, const BitVector& b) { return a.lowest_set() < b.lowest_set(); });
    return rows;
}

} // namespace

Subspace Subspace::zero(std::size_t ambient_dim) {
    if (ambient_dim == 0)
        throw std::invalid_argument("Subspace: ambient dimension must be positive");
    return Subspace(ambient_dim);
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s = zero(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i)
        s.basis_.push_back(BitVector::unit(ambient_dim, i));
    return s;
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const BitVector> vectors) {
    Subspace s = zero(ambient_dim);
    s.basis_ = rref(ambient_dim, vectors);
    return s;
}

bool Subspace::contains(const BitVector& v) const {
    if (v.length() != ambient_)
        throw std::invalid_argument("Subspace::contains: ambient mismatch");
    BitVector w = v;
    for (const auto& b : basis_) {
        int p = b.lowest_set();
        if (w.get(static_cast<std::size_t>(p)))
            w ^= b;
    }
    return w.is_zero();
}

Subspace Subspace::image(const BitMatrix& g) const {
    std::vector<BitVector> imgs;
    imgs.reserve(basis_.size());
    for (const auto& b : basis_)
        imgs.push_back(g.apply(b));
    return Subspace::span(g.cols(), imgs);
}

std::vector<BitVector> Subspace::enumerate() const {
    if (dim() > 24)
        throw std::invalid_argument("Subspace::enumerate: dimension too large");
    std::vector<BitVector> out;
    const std::size_t n = std::size_t(1) << dim();
    out.reserve(n);
    for (std::size_t mask = 0; mask < n; ++mask) {
        BitVector v(ambient_);
        for (std::size_t i = 0; i < dim(); ++i)
            if ((mask >> i) & 1u)
                v ^= basis_[i];
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace ep::gf2
