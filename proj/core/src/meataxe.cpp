#include "ep/rep/meataxe.hpp"

#include "ep/errors.hpp"
#include "ep/poly2.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

namespace ep::rep {

using gf2::BitMatrix;
using gf2::BitVector;
using gf2::Subspace;

Subspace spin(const BitVector& v, const std::vector<BitMatrix>& gens) {
    const std::size_t d = v.length();
    std::vector<BitVector> basis; // RREF-maintained
    std::deque<BitVector> queue;

    auto insert = [&](BitVector w) -> bool {
        for (const auto& b : basis) {
            int p = b.lowest_set();
            if (w.get(static_cast<std::size_t>(p)))
                w ^= b;
        }
        if (w.is_zero())
            return false;
        int p = w.lowest_set();
        for (auto& b : basis)
            if (b.get(static_cast<std::size_t>(p)))
                b ^= w;
        basis.push_back(w);
        queue.push_back(std::move(w));
        return true;
    };

    insert(v);
    while (!queue.empty() && basis.size() < d) {
        BitVector u = queue.front();
        queue.pop_front();
        for (const auto& g : gens)
            insert(g.apply(u));
    }
    return Subspace::span(d, basis);
}

namespace {

// Orthogonal complement {v : v . u = 0 for all u in S}; if S is invariant
// under the transposed generators, the complement is invariant under the
// original ones.
Subspace orthogonal_complement(const Subspace& s) {
    const std::size_t d = s.ambient_dim();
    BitMatrix m(d, s.dim() == 0 ? 1 : s.dim());
    if (s.dim() == 0)
        return Subspace::full(d);
    for (std::size_t j = 0; j < s.dim(); ++j)
        for (std::size_t i = 0; i < d; ++i)
            if (s.basis()[j].get(i))
                m.set(i, j, true);
    return gf2::kernel(m);
}

struct Check {
    // Outcome of probing one algebra element.
    bool decided = false;
    MeatAxeResult result;
};

// Probe theta per Norton: any failed spin certifies reducibility; an
// irreducible min-poly factor p with dim ker p(theta) = deg p allows the
// conclusive one-vector test on both sides.
Check probe(const BitMatrix& theta, const std::vector<BitMatrix>& gens,
            const std::vector<BitMatrix>& gens_t, std::size_t d) {
    Check out;
    poly2::Poly mp = poly2::min_poly(theta);
    auto factors = poly2::distinct_irreducible_factors(mp);
    // Deterministic order; try exact-nullity factors first.
    std::stable_sort(factors.begin(), factors.end(),
                     [&](const poly2::Poly& a, const poly2::Poly& b) {
                         return a.degree() < b.degree();
                     });
    for (const auto& p : factors) {
        BitMatrix b = poly2::eval_at(p, theta);
        Subspace n = gf2::kernel(b);
        if (n.dim() == 0)
            continue; // cannot happen for min-poly factors; guards corrupt input
        for (const auto& v : n.basis()) {
            Subspace s = spin(v, gens);
            if (s.dim() < d) {
                out.decided = true;
                out.result.irreducible = false;
                out.result.invariant = s;
                return out;
            }
        }
        if (n.dim() == static_cast<std::size_t>(p.degree())) {
            Subspace nt = gf2::kernel(b.transpose());
            if (nt.dim() == 0)
                continue;
            Subspace st = spin(nt.basis()[0], gens_t);
            if (st.dim() < d) {
                out.decided = true;
                out.result.irreducible = false;
                out.result.invariant = orthogonal_complement(st);
                return out;
            }
            out.decided = true;
            out.result.irreducible = true;
            return out;
        }
    }
    return out;
}

} // namespace

MeatAxeResult meataxe_analyze(const std::vector<BitMatrix>& gens, const MeatAxeOptions& opts) {
    if (gens.empty())
        throw std::invalid_argument("meataxe: no generators");
    const std::size_t d = gens[0].rows();
    for (const auto& g : gens) {
        if (!g.is_square() || g.rows() != d)
            throw std::invalid_argument("meataxe: generators must be square of equal size");
        if (!g.is_invertible())
            throw data_error("meataxe: non-invertible generator (corrupt group data)");
    }
    if (d == 1)
        return {true, std::nullopt};

    std::vector<BitMatrix> gens_t;
    gens_t.reserve(gens.size());
    for (const auto& g : gens)
        gens_t.push_back(g.transpose());

    // Randomized phase: seeded walks through short products and sums.
    std::mt19937_64 rng(opts.seed);
    auto random_element = [&]() {
        auto word = [&]() {
            BitMatrix w = gens[rng() % gens.size()];
            unsigned len = 1 + static_cast<unsigned>(rng() % 4);
            for (unsigned i = 0; i < len; ++i)
                w = w * gens[rng() % gens.size()];
            return w;
        };
        BitMatrix theta = word();
        if (rng() & 1)
            theta = theta + word();
        if (rng() & 1)
            theta = theta + BitMatrix::identity(d);
        return theta;
    };

    for (unsigned attempt = 0; attempt < opts.random_attempts; ++attempt) {
        Check c = probe(random_element(), gens, gens_t, d);
        if (c.decided)
            return c.result;
    }

    // Deterministic fallback: spin every standard basis vector (kernel
    // vectors of tried elements were already spun inside probe).
    for (std::size_t i = 0; i < d; ++i) {
        Subspace s = spin(BitVector::unit(d, i), gens);
        if (s.dim() < d)
            return {false, s};
    }

    // Deterministic algebra sweep: words in generator order, then sums.
    std::vector<BitMatrix> words{BitMatrix::identity(d)};
    for (std::size_t limit = 0; words.size() < 256; ++limit) {
        if (limit >= words.size())
            break;
        for (const auto& g : gens) {
            BitMatrix w = words[limit] * g;
            if (std::find(words.begin(), words.end(), w) == words.end())
                words.push_back(std::move(w));
            if (words.size() >= 256)
                break;
        }
    }
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            Check c = probe(words[i] + words[j], gens, gens_t, d);
            if (c.decided)
                return c.result;
        }

    // Last resort at tiny dimension: spin every nonzero vector.
    if (d <= 24) {
        for (std::uint64_t idx = 1; idx < (std::uint64_t(1) << d); ++idx) {
            Subspace s = spin(BitVector::from_index(d, idx), gens);
            if (s.dim() < d)
                return {false, s};
        }
        return {true, std::nullopt};
    }
    throw std::runtime_error("meataxe: inconclusive after bounded search");
}

bool is_irreducible(const std::vector<BitMatrix>& gens, const MeatAxeOptions& opts) {
    return meataxe_analyze(gens, opts).irreducible;
}

} // namespace ep::rep
