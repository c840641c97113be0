#include "ep/grp/orbits.hpp"

#include "ep/errors.hpp"
#include "ep/rep/actions.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace ep::grp {

std::vector<std::uint32_t> Orbit::word_to(std::uint64_t member) const {
    std::vector<std::uint32_t> word;
    std::uint64_t cur = member;
    while (cur != rep) {
        auto it = parent.find(cur);
        if (it == parent.end())
            throw std::invalid_argument("Orbit::word_to: not a member");
        word.push_back(it->second.second);
        cur = it->second.first;
    }
    std::reverse(word.begin(), word.end());
    return word;
}

namespace {

// Image of the vector encoded by idx under g, as an index. The row masks of
// g fit in single words for d <= 64.
std::uint64_t apply_index(const std::vector<std::uint64_t>& rows, std::uint64_t idx) {
    std::uint64_t out = 0;
    std::uint64_t v = idx;
    while (v) {
        unsigned i = static_cast<unsigned>(std::countr_zero(v));
        v &= v - 1;
        out ^= rows[i];
    }
    return out;
}

std::vector<std::uint64_t> row_masks(const gf2::BitMatrix& g) {
    std::vector<std::uint64_t> rows(g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i)
        rows[i] = g.row(i).to_index();
    return rows;
}

} // namespace

OrbitDecomposition orbit_decomposition(const MatrixGroup& h, const rep::ModuleTag& tag,
                                       std::size_t cap_dim) {
    h.validate();
    const std::size_t d = tag.induced_dim(h.dim);
    if (d > cap_dim || d > 63)
        throw cap_error("orbit_decomposition: induced dimension " + std::to_string(d) +
                        " exceeds cap " + std::to_string(std::min<std::size_t>(cap_dim, 63)) +
                        "; direct method infeasible, use bounds");

    OrbitDecomposition out;
    out.module_dim = d;
    out.induced_gens = rep::induce_all(h.generators, tag);

    std::vector<std::vector<std::uint64_t>> gen_rows;
    gen_rows.reserve(out.induced_gens.size());
    for (const auto& g : out.induced_gens)
        gen_rows.push_back(row_masks(g));

    const std::uint64_t total = std::uint64_t(1) << d;
    std::vector<bool> visited(total, false);
    visited[0] = true;

    for (std::uint64_t start = 1; start < total; ++start) {
        if (visited[start])
            continue;
        Orbit orbit;
        orbit.rep = start;
        std::deque<std::uint64_t> queue{start};
        visited[start] = true;
        orbit.members.push_back(start);
        while (!queue.empty()) {
            std::uint64_t u = queue.front();
            queue.pop_front();
            for (std::uint32_t gi = 0; gi < gen_rows.size(); ++gi) {
                std::uint64_t w = apply_index(gen_rows[gi], u);
                if (!visited[w]) {
                    visited[w] = true;
                    orbit.members.push_back(w);
                    orbit.parent.emplace(w, std::make_pair(u, gi));
                    queue.push_back(w);
                }
            }
        }
        std::sort(orbit.members.begin(), orbit.members.end());
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

PermAction induced_permutation(const std::vector<gf2::BitMatrix>& induced_gens,
                               const Orbit& orbit) {
    PermAction act;
    act.degree = orbit.members.size();
    auto position = [&](std::uint64_t v) -> std::uint32_t {
        auto it = std::lower_bound(orbit.members.begin(), orbit.members.end(), v);
        if (it == orbit.members.end() || *it != v)
            throw data_error("induced_permutation: orbit not closed under generators");
        return static_cast<std::uint32_t>(it - orbit.members.begin());
    };
    for (const auto& g : induced_gens) {
        auto rows = row_masks(g);
        std::vector<std::uint32_t> img(act.degree);
        for (std::size_t p = 0; p < act.degree; ++p)
            img[p] = position(apply_index(rows, orbit.members[p]));
        act.images.push_back(std::move(img));
    }
    return act;
}

std::vector<gf2::BitMatrix> stabilizer_generators(const std::vector<gf2::BitMatrix>& induced_gens,
                                                  const Orbit& orbit) {
    if (induced_gens.empty())
        return {};
    const std::size_t d = induced_gens[0].rows();
    auto word_matrix = [&](const std::vector<std::uint32_t>& word) {
        gf2::BitMatrix m = gf2::BitMatrix::identity(d);
        for (auto gi : word)
            m = m * induced_gens[gi];
        return m;
    };
    std::vector<std::vector<std::uint64_t>> gen_rows;
    for (const auto& g : induced_gens)
        gen_rows.push_back(row_masks(g));

    std::vector<gf2::BitMatrix> out;
    for (std::uint64_t u : orbit.members) {
        gf2::BitMatrix tu = word_matrix(orbit.word_to(u));
        for (std::uint32_t gi = 0; gi < induced_gens.size(); ++gi) {
            std::uint64_t w = apply_index(gen_rows[gi], u);
            gf2::BitMatrix s = tu * induced_gens[gi] * word_matrix(orbit.word_to(w)).inverse();
            if (!s.is_identity() && std::find(out.begin(), out.end(), s) == out.end())
                out.push_back(std::move(s));
        }
    }
    return out;
}

} // namespace ep::grp
