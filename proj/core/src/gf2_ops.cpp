#include "ep/gf2/ops.hpp"

#include <stdexcept>
#include <vector>

namespace ep::gf2 {

Subspace kernel(const BitMatrix& a) {
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    // Eliminate [A | I]; rows whose A-part vanishes carry a left-kernel basis.
    std::vector<BitVector> left, right;
    left.reserve(n);
    right.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        left.push_back(a.row(i));
        right.push_back(BitVector::unit(n, i));
    }
    std::vector<std::size_t> pivot_rows;
    std::vector<int> pivot_cols;
    std::vector<bool> used(n, false);
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!used[i] && left[i].get(c)) {
                p = i;
                break;
            }
        if (p == n)
            continue;
        used[p] = true;
        for (std::size_t i = 0; i < n; ++i)
            if (i != p && left[i].get(c)) {
                left[i] ^= left[p];
                right[i] ^= right[p];
            }
    }
    std::vector<BitVector> ker;
    for (std::size_t i = 0; i < n; ++i)
        if (left[i].is_zero())
            ker.push_back(right[i]);
    return Subspace::span(n, ker);
}

Subspace fixed_space(const BitMatrix& g) {
    if (!g.is_square())
        throw std::invalid_argument("fixed_space: matrix must be square");
    return kernel(g + BitMatrix::identity(g.rows()));
}

Subspace intersect(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim())
        throw std::invalid_argument("intersect: ambient dimension mismatch");
    const std::size_t n = s.ambient_dim();
    // Zassenhaus: rows [u|u] for u in s, [w|0] for w in t; after eliminating
    // the left half, rows with zero left part carry s ∩ t in the right part.
    std::vector<BitVector> rows;
    auto widen = [n](const BitVector& v, bool duplicate) {
        BitVector w(2 * n);
        for (std::size_t i = 0; i < n; ++i)
            if (v.get(i)) {
                w.set(i, true);
                if (duplicate)
                    w.set(n + i, true);
            }
        return w;
    };
    for (const auto& u : s.basis())
        rows.push_back(widen(u, true));
    for (const auto& w : t.basis())
        rows.push_back(widen(w, false));

    std::vector<bool> used(rows.size(), false);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!used[i] && rows[i].get(c)) {
                p = i;
                break;
            }
        if (p == rows.size())
            continue;
        used[p] = true;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != p && rows[i].get(c))
                rows[i] ^= rows[p];
    }
    std::vector<BitVector> inter;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        bool left_zero = true;
        for (std::size_t c = 0; c < n && left_zero; ++c)
            left_zero = !rows[i].get(c);
        if (!left_zero)
            continue;
        BitVector v(n);
        for (std::size_t c = 0; c < n; ++c)
            if (rows[i].get(n + c))
                v.set(c, true);
        if (!v.is_zero())
            inter.push_back(std::move(v));
    }
    return Subspace::span(n, inter);
}

Subspace common_fixed_space(std::size_t dim, std::span<const BitMatrix> gens) {
    Subspace acc = Subspace::full(dim);
    for (const auto& g : gens) {
        if (!g.is_square() || g.rows() != dim)
            throw std::invalid_argument("common_fixed_space: generator size mismatch");
        acc = intersect(acc, fixed_space(g));
        if (acc.dim() == 0)
            break;
    }
    return acc;
}

} // namespace ep::gf2
