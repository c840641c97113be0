#pragma once

#include "ep/grp/matrix_group.hpp"
#include "ep/rep/module_tag.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ep::grp {

/// One orbit of nonzero vectors, indexed by the integer encoding of the
/// vector (bit i = coordinate i). Members sorted ascending; rep = minimum.
/// parent holds BFS transversal edges (member -> predecessor, generator),
/// enough to rebuild a word rep -> member for stabilizer work.
struct Orbit {
    std::uint64_t rep = 0;
    std::vector<std::uint64_t> members;
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint32_t>> parent;

    /// Generator indices taking rep to member along BFS edges.
    std::vector<std::uint32_t> word_to(std::uint64_t member) const;
};

struct OrbitDecomposition {
    std::size_t module_dim = 0;
    std::vector<gf2::BitMatrix> induced_gens;
    std::vector<Orbit> orbits; // sorted by rep
};

/// BFS closure of the induced generator action on all nonzero vectors of the
/// induced module. Throws ep::cap_error when the induced dimension exceeds
/// cap_dim (flat-bitset visited set would not fit).
OrbitDecomposition orbit_decomposition(const MatrixGroup& h, const rep::ModuleTag& tag,
                                       std::size_t cap_dim = 28);

struct PermAction {
    std::size_t degree = 0;
    std::vector<std::vector<std::uint32_t>> images; // one permutation per generator
};

/// Permutation images of the induced generators on one orbit, indexed by the
/// sorted member order. Throws ep::data_error if the orbit is not closed.
PermAction induced_permutation(const std::vector<gf2::BitMatrix>& induced_gens,
                               const Orbit& orbit);

/// Schreier generators of the stabilizer of the orbit representative.
std::vector<gf2::BitMatrix> stabilizer_generators(const std::vector<gf2::BitMatrix>& induced_gens,
                                                  const Orbit& orbit);

} // namespace ep::grp
