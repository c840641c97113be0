#pragma once

#include "ep/gf2/bitmatrix.hpp"
#include "ep/poly2.hpp"
#include "ep/weights/weights.hpp"

namespace ep::rep {

/// Block-diagonal matrix over F_2 of order dividing r whose eigenvalue
/// multiset over the splitting field is {omega^e : e in exps}, one companion
/// block per doubling (Frobenius) orbit, identity blocks for zero exponents.
/// omega is pinned to a root of the minimal-binary irreducible factor of
/// x^r + 1 of degree ord_r(2), so the orbit {1,2,4} mod 7 yields the
/// companion matrix of x^3 + x + 1.
/// Throws std::invalid_argument if the multiset is not closed under doubling.
gf2::BitMatrix semisimple_witness(unsigned r, const weights::ExponentMultiset& exps);

/// The irreducible factor of x^r + 1 that is the minimal polynomial of
/// omega^a under the convention above (exposed for tests).
poly2::Poly orbit_min_poly(unsigned r, unsigned a);

} // namespace ep::rep
