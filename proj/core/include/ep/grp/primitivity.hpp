#pragma once

#include "ep/grp/orbits.hpp"

#include <optional>
#include <vector>

namespace ep::grp {

/// Nontrivial block system certificate: an invariant partition with blocks
/// of equal size 1 < b < degree. Blocks sorted by first element.
struct BlockSystem {
    std::vector<std::vector<std::uint32_t>> blocks;
};

struct PrimitivityResult {
    bool primitive = false;
    std::optional<BlockSystem> blocks; // present iff imprimitive
};

bool is_transitive(const PermAction& action);

/// Minimal-block test: for each beta, close the partition generated by
/// {0, beta} under the action (union-find); primitive iff every closure is
/// the full point set. Throws std::invalid_argument on intransitive input.
PrimitivityResult is_primitive(const PermAction& action);

/// Certificate re-verification: partition of 0..degree-1 into equal blocks,
/// nontrivial, and closed under every generator.
bool verify_block_system(const PermAction& action, const BlockSystem& system);

} // namespace ep::grp
