#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ep::gf2 {

using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

/// Dense vector over F_2, packed 64 bits per word. Vectors are row vectors
/// throughout the project: matrices act on the right, v |-> v*g.
class BitVector {
public:
    explicit BitVector(std::size_t length);

    static BitVector unit(std::size_t length, std::size_t i);
    /// Bits of `index` as coordinates: bit i of index = coordinate i.
    static BitVector from_index(std::size_t length, std::uint64_t index);
    static BitVector parse(std::string_view text);

    std::size_t length() const { return len_; }

    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);

    bool is_zero() const;
    std::size_t popcount() const;
    /// Index of the lowest/highest set bit, or -1 if zero.
    int lowest_set() const;
    int highest_set() const;

    BitVector& operator^=(const BitVector& other);
    BitVector operator^(const BitVector& other) const;

    bool operator==(const BitVector& other) const = default;

    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    /// Coordinates as an integer index; requires length <= 64.
    std::uint64_t to_index() const;

    std::string to_string() const;

private:
    std::size_t len_;
    std::vector<Word> words_;
};

} // namespace ep::gf2

template <>
struct std::hash<ep::gf2::BitVector> {
    std::size_t operator()(const ep::gf2::BitVector& v) const noexcept {
        std::size_t h = v.length() * 0x9e3779b97f4a7c15ull;
        for (auto w : v.words())
            h = (h ^ w) * 0x100000001b3ull;
        return h;
    }
};
