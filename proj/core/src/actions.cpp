#include "ep/rep/actions.hpp"

#include <stdexcept>

namespace ep::rep {

using gf2::BitMatrix;

std::vector<std::vector<unsigned>> colex_subsets(unsigned k, unsigned m) {
    // Colex: compare subsets by their largest differing element.
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(m);
    // Generate in colex order directly: iterate the largest element outermost.
    // A subset {s_0 < ... < s_{m-1}} precedes another iff, reading from the
    // top element down, it is smaller; recursion over the top element does it.
    struct Gen {
        unsigned m;
        std::vector<std::vector<unsigned>>& out;
        std::vector<unsigned>& cur;
        void run(unsigned top_slots, unsigned limit) {
            if (top_slots == 0) {
                out.push_back(cur);
                return;
            }
            for (unsigned v = top_slots - 1; v < limit; ++v) {
                cur[top_slots - 1] = v;
                run(top_slots - 1, v);
            }
        }
    };
    if (m == 0) {
        out.push_back({});
        return out;
    }
    Gen gen{m, out, cur};
    gen.run(m, k);
    return out;
}

namespace {

// Determinant over F_2 of the SxT submatrix of g (rows S, columns T).
bool subdet(const BitMatrix& g, const std::vector<unsigned>& rows,
            const std::vector<unsigned>& cols) {
    const std::size_t m = rows.size();
    // Gaussian elimination on an m x m bit block held in 64-bit masks.
    std::uint64_t a[16];
    for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t r = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (g.get(rows[i], cols[j]))
                r |= std::uint64_t(1) << j;
        a[i] = r;
    }
    for (std::size_t c = 0; c < m; ++c) {
        std::uint64_t mask = std::uint64_t(1) << c;
        std::size_t p = m;
        for (std::size_t i = c; i < m; ++i)
            if (a[i] & mask) {
                p = i;
                break;
            }
        if (p == m)
            return false;
        std::swap(a[c], a[p]);
        for (std::size_t i = c + 1; i < m; ++i)
            if (a[i] & mask)
                a[i] ^= a[c];
    }
    return true;
}

} // namespace

BitMatrix wedge_action(const BitMatrix& g, unsigned m) {
    if (!g.is_square())
        throw std::invalid_argument("wedge_action: matrix must be square");
    const unsigned k = static_cast<unsigned>(g.rows());
    if (m < 2 || m > k)
        throw std::invalid_argument("wedge_action: power out of range");
    if (m > 16)
        throw std::invalid_argument("wedge_action: power too large");
    auto subsets = colex_subsets(k, m);
    const std::size_t d = subsets.size();
    BitMatrix out(d, d);
    for (std::size_t s = 0; s < d; ++s)
        for (std::size_t t = 0; t < d; ++t)
            if (subdet(g, subsets[s], subsets[t]))
                out.set(s, t, true);
    return out;
}

BitMatrix tensor_action(const BitMatrix& g, const BitMatrix& h) {
    if (!g.is_square() || !h.is_square())
        throw std::invalid_argument("tensor_action: matrices must be square");
    const std::size_t a = g.rows(), b = h.rows();
    BitMatrix out(a * b, a * b);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t k = 0; k < a; ++k) {
            if (!g.get(i, k))
                continue;
            for (std::size_t j = 0; j < b; ++j)
                for (std::size_t l = 0; l < b; ++l)
                    if (h.get(j, l))
                        out.set(i * b + j, k * b + l, true);
        }
    return out;
}

BitMatrix induce(const BitMatrix& g, const ModuleTag& tag) {
    switch (tag.kind()) {
    case ModuleTag::Kind::Natural:
        return g;
    case ModuleTag::Kind::Wedge:
        return wedge_action(g, tag.wedge_power());
    case ModuleTag::Kind::Tensor: {
        BitMatrix acc = induce(g, tag.parts()[0]);
        for (std::size_t i = 1; i < tag.parts().size(); ++i)
            acc = tensor_action(acc, induce(g, tag.parts()[i]));
        return acc;
    }
    }
    throw std::logic_error("induce: bad tag");
}

std::vector<BitMatrix> induce_all(const std::vector<BitMatrix>& gens, const ModuleTag& tag) {
    std::vector<BitMatrix> out;
    out.reserve(gens.size());
    for (const auto& g : gens)
        out.push_back(induce(g, tag));
    return out;
}

} // namespace ep::rep
