#pragma once

#include "ep/grp/matrix_group.hpp"

#include <vector>

namespace ep::grp {

inline constexpr std::size_t kDefaultOrderCap = 200000;

/// All elements by BFS closure under right multiplication. Sets h.order, or
/// checks it if already declared. Throws ep::cap_error past the cap.
std::vector<gf2::BitMatrix> enumerate_elements(MatrixGroup& h,
                                               std::size_t cap = kDefaultOrderCap);

/// One conjugacy class of maximal subgroups, exhaustively certified.
struct MaximalSubgroupClass {
    std::vector<gf2::BitMatrix> generators; // of the representative subgroup
    Nat subgroup_order;
    Nat class_size; // |H : N_H(M)|
};

/// All maximal proper subgroups of a tiny group, grouped into conjugacy
/// classes. Works up the subgroup lattice from the trivial subgroup by
/// one-generator extensions; a subgroup is certified maximal exactly when
/// every extension closes to the whole group. Includes the trivial subgroup
/// when H has prime order.
std::vector<MaximalSubgroupClass> tiny_maximal_subgroups(const MatrixGroup& h,
                                                         std::size_t cap = kDefaultOrderCap);

} // namespace ep::grp
