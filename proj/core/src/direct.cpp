#include "ep/engine/direct.hpp"

#include "ep/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace ep::engine {

Verdict direct_ep_check(const grp::MatrixGroup& h, const rep::ModuleTag& tag,
                        const DirectOptions& opts) {
    h.validate();
    bool nontrivial = false;
    for (const auto& g : h.generators)
        if (!g.is_identity())
            nontrivial = true;
    if (!nontrivial)
        throw std::invalid_argument("direct_ep_check: group is trivial");

    auto decomp = grp::orbit_decomposition(h, tag, opts.cap_dim);

    if (!rep::is_irreducible(decomp.induced_gens, opts.meataxe))
        throw data_error("direct_ep_check: module is reducible; G is not primitive, "
                         "extreme primitivity is undefined here");

    std::size_t checked = 0;
    for (const auto& orbit : decomp.orbits) {
        auto act = grp::induced_permutation(decomp.induced_gens, orbit);
        auto prim = grp::is_primitive(act);
        if (!prim.primitive) {
            Verdict v;
            v.kind = Verdict::Kind::NotEP;
            v.certificate = BlockCertificate{orbit.rep, *prim.blocks};
            std::ostringstream os;
            os << "orbit of size " << orbit.members.size() << " (rep " << orbit.rep
               << ") is imprimitive: " << prim.blocks->blocks.size() << " blocks of size "
               << prim.blocks->blocks[0].size();
            v.detail = os.str();
            return v;
        }
        ++checked;
    }
    Verdict v;
    v.kind = Verdict::Kind::EP;
    std::ostringstream os;
    os << "all " << checked << " orbit(s) primitive on " << ((std::uint64_t(1) << decomp.module_dim) - 1)
       << " nonzero vectors";
    v.detail = os.str();
    return v;
}

bool verify_certificate(const grp::MatrixGroup& h, const rep::ModuleTag& tag,
                        const BlockCertificate& cert, std::size_t cap_dim) {
    auto decomp = grp::orbit_decomposition(h, tag, cap_dim);
    for (const auto& orbit : decomp.orbits) {
        if (orbit.rep != cert.orbit_rep)
            continue;
        auto act = grp::induced_permutation(decomp.induced_gens, orbit);
        return grp::verify_block_system(act, cert.blocks);
    }
    return false;
}

} // namespace ep::engine
