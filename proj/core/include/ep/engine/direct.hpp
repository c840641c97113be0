#pragma once

#include "ep/engine/records.hpp"
#include "ep/grp/matrix_group.hpp"
#include "ep/rep/meataxe.hpp"

namespace ep::engine {

struct DirectOptions {
    std::size_t cap_dim = 28;
    rep::MeatAxeOptions meataxe;
};

/// Direct extreme-primitivity check for G = V:H: verifies H irreducible on
/// the induced module (throws ep::data_error otherwise, since G is not even
/// primitive there), decomposes V \ {0} into H-orbits, and tests each induced
/// action for primitivity. EP iff every orbit is primitive; notEP comes with
/// the offending orbit and a block system.
Verdict direct_ep_check(const grp::MatrixGroup& h, const rep::ModuleTag& tag,
                        const DirectOptions& opts = {});

/// Re-check a notEP block certificate against the group it came from.
bool verify_certificate(const grp::MatrixGroup& h, const rep::ModuleTag& tag,
                        const BlockCertificate& cert, std::size_t cap_dim = 28);

} // namespace ep::engine
