#pragma once

#include <stdexcept>
#include <string>

namespace ep {

/// Input file or command line could not be parsed.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Shipped or user data failed an integrity check (the math forbids it).
struct data_error : std::runtime_error {
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource cap was exceeded; the direct method is infeasible.
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ep
