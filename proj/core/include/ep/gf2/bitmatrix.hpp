#pragma once

#include "ep/gf2/bitvector.hpp"

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ep::gf2 {

/// Dense matrix over F_2, rows packed 64 bits per word. Row-vector
/// convention project-wide: v |-> v*g, so row i of g is the image of e_i.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<BitVector>& rows);
    /// Test-friendly constructor: {"101","010",...}.
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    bool get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, bool value);

    BitVector row(std::size_t i) const;
    void set_row(std::size_t i, const BitVector& v);
    /// Raw words of row i (read-only).
    std::span<const Word> row_words(std::size_t i) const;

    /// v * (*this); requires v.length() == rows().
    BitVector apply(const BitVector& v) const;

    BitMatrix operator*(const BitMatrix& other) const;
    BitMatrix operator+(const BitMatrix& other) const;
    bool operator==(const BitMatrix& other) const = default;

    BitMatrix transpose() const;
    std::size_t rank() const;
    bool is_invertible() const;
    /// Inverse; throws std::invalid_argument if singular or non-square.
    BitMatrix inverse() const;
    bool is_identity() const;

    /// Text format: first line "GF2 <rows> <cols>", then rows of 0/1 chars.
    std::string to_text() const;
    static BitMatrix parse_text(std::istream& in);
    static BitMatrix parse_text(std::string_view text);

    /// Raw data for hashing/keying; layout is row-major words.
    std::span<const Word> data() const { return data_; }

private:
    std::size_t rows_, cols_, wpr_; // wpr_: words per row
    std::vector<Word> data_;
};

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
BitMatrix mat_pow(const BitMatrix& a, std::uint64_t e);

} // namespace ep::gf2

template <>
struct std::hash<ep::gf2::BitMatrix> {
    std::size_t operator()(const ep::gf2::BitMatrix& m) const noexcept {
        std::size_t h = (m.rows() * 1315423911u) ^ (m.cols() * 2654435761u);
        for (auto w : m.data())
            h = (h ^ w) * 0x100000001b3ull;
        return h;
    }
};
