#include "ep/rep/semisimple.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ep::rep {

using poly2::Poly;

namespace {

// Multiplicative order of 2 mod r.
unsigned ord2(unsigned r) {
    unsigned o = 1, v = 2 % r;
    while (v != 1) {
        v = (2 * v) % r;
        ++o;
    }
    return o;
}

struct FactorTable {
    Poly omega_poly;                 // minimal polynomial of omega
    std::map<unsigned, Poly> by_rep; // orbit minimal representative -> factor
};

FactorTable build_factor_table(unsigned r) {
    FactorTable table;
    auto factors = poly2::distinct_irreducible_factors(Poly::x_pow_r_plus_1(r));
    const unsigned m = ord2(r);

    // omega := root of the smallest degree-m factor (factors arrive sorted).
    for (const auto& f : factors)
        if (f.degree() == static_cast<int>(m)) {
            table.omega_poly = f;
            break;
        }

    // The factor for orbit(a) is the unique g with g(omega^a) = 0, i.e.
    // g(x^a) = 0 mod omega_poly. Pure F_2[x] composition, no field tower.
    auto orbits = weights::doubling_orbits(r);
    for (const auto& orbit : orbits) {
        unsigned a = orbit[0];
        if (a == 0) {
            table.by_rep[0] = Poly::x() + Poly::one();
            continue;
        }
        Poly xa = poly2::powmod(Poly::x(), a, table.omega_poly);
        for (const auto& g : factors) {
            if (g.degree() != static_cast<int>(orbit.size()))
                continue;
            // Horner evaluation of g at x^a in F_2[x]/(omega_poly).
            Poly acc;
            for (int i = g.degree(); i >= 0; --i) {
                acc = (acc * xa) % table.omega_poly;
                if (g.get(static_cast<std::size_t>(i)))
                    acc = acc + Poly::one();
            }
            if (acc.is_zero()) {
                table.by_rep[a] = g;
                break;
            }
        }
        if (!table.by_rep.count(a))
            throw std::logic_error("semisimple_witness: no factor matched an orbit");
    }
    return table;
}

} // namespace

poly2::Poly orbit_min_poly(unsigned r, unsigned a) {
    auto table = build_factor_table(r);
    // Reduce a to its orbit's minimal representative.
    unsigned best = a % r, v = a % r;
    do {
        v = (2 * v) % r;
        best = std::min(best, v);
    } while (v != a % r);
    return table.by_rep.at(best);
}

gf2::BitMatrix semisimple_witness(unsigned r, const weights::ExponentMultiset& exps) {
    if (exps.r != r)
        throw std::invalid_argument("semisimple_witness: r mismatch");
    if (!weights::validate_f2_realizable(exps))
        throw std::invalid_argument("semisimple_witness: multiset not closed under doubling mod r");
    if (exps.entries.empty())
        throw std::invalid_argument("semisimple_witness: empty multiset");

    auto orbits = weights::doubling_orbits(r);
    std::map<unsigned, unsigned> entry_count;
    for (unsigned v : exps.entries)
        ++entry_count[v];

    FactorTable table = build_factor_table(r);

    // Blocks ordered by orbit minimal representative: zeros first as 1x1
    // identities, then one companion block per orbit occurrence.
    std::vector<gf2::BitMatrix> blocks;
    for (const auto& orbit : orbits) {
        unsigned repv = orbit[0];
        unsigned have = entry_count.count(repv) ? entry_count[repv] : 0;
        if (have == 0)
            continue;
        if (repv == 0) {
            for (unsigned i = 0; i < have; ++i)
                blocks.push_back(gf2::BitMatrix::identity(1));
            continue;
        }
        // Closure under doubling guarantees the multiplicity is constant on
        // the orbit, so `have` copies of the companion block.
        blocks.push_back(poly2::companion(table.by_rep.at(repv)));
        for (unsigned i = 1; i < have; ++i)
            blocks.push_back(blocks.back());
    }

    std::size_t dim = 0;
    for (const auto& b : blocks)
        dim += b.rows();
    if (dim != exps.entries.size())
        throw std::logic_error("semisimple_witness: block sizes do not sum to multiset size");

    gf2::BitMatrix out(dim, dim);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.rows(); ++j)
                if (b.get(i, j))
                    out.set(off + i, off + j, true);
        off += b.rows();
    }
    return out;
}

} // namespace ep::rep
