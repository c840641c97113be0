#pragma once

#include "ep/bigint.hpp"
#include "ep/gf2/bitmatrix.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ep::grp {

/// Finitely generated subgroup of GL_k(2): generator matrices plus optional
/// declared order and name. Generators must be invertible.
struct MatrixGroup {
    std::size_t dim = 0;
    std::vector<gf2::BitMatrix> generators;
    std::optional<Nat> order;
    std::string name;

    void validate() const; // throws ep::data_error on bad generators
};

/// Group file format:
///   GF2GROUP <k> <ngens> [order=<decimal>] [name=<string>]
/// followed by ngens matrix blocks in the GF2 matrix text format.
MatrixGroup parse_group(std::istream& in);
MatrixGroup parse_group_file(const std::filesystem::path& path);
std::string write_group(const MatrixGroup& g);

} // namespace ep::grp
