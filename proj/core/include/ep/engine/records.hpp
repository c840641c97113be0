#pragma once

#include "ep/bigint.hpp"
#include "ep/gf2/bitmatrix.hpp"
#include "ep/grp/primitivity.hpp"
#include "ep/rep/module_tag.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ep::engine {

/// One conjugacy class of maximal subgroups of H: a representative's
/// generators on W, the class size |H : N_H(M)|, and how the action on V is
/// induced from the natural module.
struct MaximalClassRecord {
    std::string label;
    Nat class_size;
    std::vector<gf2::BitMatrix> generators;
    rep::ModuleTag module_tag = rep::ModuleTag::natural();
};

/// A dataset of maximal classes for one group; `complete` asserts the list
/// is all of M(H). `missing_bound` optionally caps the contribution of any
/// classes not listed (enables notEP conclusions from incomplete data).
struct MaximalDataset {
    std::string group;
    Nat order;
    bool complete = false;
    std::optional<Nat> missing_bound;
    std::vector<MaximalClassRecord> classes;
};

struct ClassContribution {
    std::string label;
    Nat class_size;
    std::size_t fix_dim = 0;
    Nat contribution; // class_size * (2^fix_dim - 1)
};

struct FValueReport {
    std::size_t d = 0;
    std::vector<ClassContribution> per_class;
    Nat total;
};

/// Machine-checkable certificates attached to verdicts.
struct BoundCertificate {
    std::string inequality; // e.g. "(2^20-1)*612624 < 2^40-1"
    Nat lhs, rhs;
    bool holds = false;
};

struct BlockCertificate {
    std::uint64_t orbit_rep = 0;
    grp::BlockSystem blocks;
};

struct FEqualityCertificate {
    Nat f;
    Nat target; // 2^d - 1
};

using Certificate =
    std::variant<std::monostate, BoundCertificate, BlockCertificate, FEqualityCertificate>;

struct Verdict {
    enum class Kind { EP, NotEP, Inconclusive } kind = Kind::Inconclusive;
    Certificate certificate;
    std::string detail;

    bool is_ep() const { return kind == Kind::EP; }
    bool is_not_ep() const { return kind == Kind::NotEP; }
    std::string kind_string() const;
};

} // namespace ep::engine
