#pragma once

#include "ep/gf2/bitmatrix.hpp"
#include "ep/rep/module_tag.hpp"

#include <vector>

namespace ep::rep {

/// Matrix of Λ^m g on the C(k,m)-dimensional space with basis e_S, S an
/// m-subset in colexicographic order; entry (S,T) is the F_2 determinant of
/// the SxT submatrix of g. Functorial: Λ^m(gh) = Λ^m(g) Λ^m(h).
gf2::BitMatrix wedge_action(const gf2::BitMatrix& g, unsigned m);

/// Kronecker product, basis ordered lexicographically by (i,j):
/// (e_i ⊗ e_j) g⊗h has coefficient g(i,k) h(j,l) on e_k ⊗ e_l.
gf2::BitMatrix tensor_action(const gf2::BitMatrix& g, const gf2::BitMatrix& h);

/// Induce the action of g on the module described by tag.
gf2::BitMatrix induce(const gf2::BitMatrix& g, const ModuleTag& tag);
std::vector<gf2::BitMatrix> induce_all(const std::vector<gf2::BitMatrix>& gens,
                                       const ModuleTag& tag);

/// m-subsets of {0..k-1} in colexicographic order (the wedge basis order).
std::vector<std::vector<unsigned>> colex_subsets(unsigned k, unsigned m);

} // namespace ep::rep
