#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ep {

/// Arbitrary-precision natural. All bound arithmetic is exact; no floating
/// point anywhere in the project.
using Nat = boost::multiprecision::cpp_int;

/// 2^e - 1 as an exact natural.
inline Nat pow2_minus_1(std::size_t e) {
    return (Nat(1) << e) - 1;
}

} // namespace ep
