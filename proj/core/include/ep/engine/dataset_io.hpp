#pragma once

#include "ep/engine/records.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace ep::engine {

/// Maximal-class dataset (.mxl): JSON with decimal strings for big integers.
/// {group, order, complete, [missing_bound], classes: [{label, class_size,
///  module_tag, gens: [GF2 text blocks]}]}
MaximalDataset parse_dataset(std::istream& in);
MaximalDataset parse_dataset_file(const std::filesystem::path& path);
std::string write_dataset(const MaximalDataset& dataset);

} // namespace ep::engine
