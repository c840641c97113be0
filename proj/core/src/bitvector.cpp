#include "ep/gf2/bitvector.hpp"

#include "ep/errors.hpp"

#include <bit>
#include <stdexcept>

namespace ep::gf2 {

BitVector::BitVector(std::size_t length)
    : len_(length), words_(words_for(length), 0) {
    if (length == 0)
        throw std::invalid_argument("BitVector: length must be positive");
}

BitVector BitVector::unit(std::size_t length, std::size_t i) {
    BitVector v(length);
    v.set(i, true);
    return v;
}

BitVector BitVector::from_index(std::size_t length, std::uint64_t index) {
    if (length > kWordBits)
        throw std::invalid_argument("BitVector::from_index: length > 64");
    BitVector v(length);
    if (length < kWordBits && (index >> length) != 0)
        throw std::invalid_argument("BitVector::from_index: index out of range");
    v.words_[0] = index;
    return v;
}

BitVector BitVector::parse(std::string_view text) {
    if (text.empty())
        throw parse_error("BitVector: empty row");
    BitVector v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            v.set(i, true);
        else if (text[i] != '0')
            throw parse_error("BitVector: row must consist of 0/1 characters");
    }
    return v;
}

bool BitVector::get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVector::set(std::size_t i, bool value) {
    if (i >= len_)
        throw std::out_of_range("BitVector::set");
    Word mask = Word(1) << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

bool BitVector::is_zero() const {
    for (auto w : words_)
        if (w)
            return false;
    return true;
}

std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

int BitVector::lowest_set() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k])
            return static_cast<int>(k * kWordBits +
                                    static_cast<std::size_t>(std::countr_zero(words_[k])));
    return -1;
}

int BitVector::highest_set() const {
    for (std::size_t k = words_.size(); k-- > 0;)
        if (words_[k])
            return static_cast<int>(k * kWordBits + (kWordBits - 1 -
                                    static_cast<std::size_t>(std::countl_zero(words_[k]))));
    return -1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (len_ != other.len_)
        throw std::invalid_argument("BitVector: length mismatch in xor");
    for (std::size_t k = 0; k < words_.size(); ++k)
        words_[k] ^= other.words_[k];
    return *this;
}

BitVector BitVector::operator^(const BitVector& other) const {
    BitVector r = *this;
    r ^= other;
    return r;
}

std::uint64_t BitVector::to_index() const {
    if (len_ > kWordBits)
        throw std::invalid_argument("BitVector::to_index: length > 64");
    return words_[0];
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

} // namespace ep::gf2
