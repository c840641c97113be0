#include "ep/gf2/bitmatrix.hpp"

#include "ep/errors.hpp"

#include <bit>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace ep::gf2 {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * wpr_, 0) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("BitMatrix: dimensions must be positive");
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows) {
    if (rows.empty())
        throw std::invalid_argument("BitMatrix::from_rows: no rows");
    BitMatrix m(rows.size(), rows[0].length());
    for (std::size_t i = 0; i < rows.size(); ++i)
        m.set_row(i, rows[i]);
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<BitVector> vs;
    vs.reserve(rows.size());
    for (auto s : rows)
        vs.push_back(BitVector::parse(s));
    return from_rows(vs);
}

bool BitMatrix::get(std::size_t i, std::size_t j) const {
    return (data_[i * wpr_ + j / kWordBits] >> (j % kWordBits)) & 1u;
}

void BitMatrix::set(std::size_t i, std::size_t j, bool value) {
    if (i >= rows_ || j >= cols_)
        throw std::out_of_range("BitMatrix::set");
    Word mask = Word(1) << (j % kWordBits);
    Word& w = data_[i * wpr_ + j / kWordBits];
    if (value)
        w |= mask;
    else
        w &= ~mask;
}

BitVector BitMatrix::row(std::size_t i) const {
    BitVector v(cols_);
    auto dst = v.words();
    for (std::size_t k = 0; k < wpr_; ++k)
        dst[k] = data_[i * wpr_ + k];
    return v;
}

void BitMatrix::set_row(std::size_t i, const BitVector& v) {
    if (v.length() != cols_)
        throw std::invalid_argument("BitMatrix::set_row: length mismatch");
    auto src = v.words();
    for (std::size_t k = 0; k < wpr_; ++k)
        data_[i * wpr_ + k] = src[k];
}

std::span<const Word> BitMatrix::row_words(std::size_t i) const {
    return {data_.data() + i * wpr_, wpr_};
}

BitVector BitMatrix::apply(const BitVector& v) const {
    if (v.length() != rows_)
        throw std::invalid_argument("BitMatrix::apply: dimension mismatch");
    BitVector out(cols_);
    auto dst = out.words();
    auto src = v.words();
    for (std::size_t i = 0; i < rows_; ++i) {
        if ((src[i / kWordBits] >> (i % kWordBits)) & 1u) {
            const Word* r = data_.data() + i * wpr_;
            for (std::size_t k = 0; k < wpr_; ++k)
                dst[k] ^= r[k];
        }
    }
    return out;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("BitMatrix: dimension mismatch in product");
    BitMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Word* dst = out.data_.data() + i * out.wpr_;
        const Word* lhs = data_.data() + i * wpr_;
        for (std::size_t j = 0; j < cols_; ++j) {
            if ((lhs[j / kWordBits] >> (j % kWordBits)) & 1u) {
                const Word* r = other.data_.data() + j * other.wpr_;
                for (std::size_t k = 0; k < other.wpr_; ++k)
                    dst[k] ^= r[k];
            }
        }
    }
    return out;
}

BitMatrix BitMatrix::operator+(const BitMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("BitMatrix: dimension mismatch in sum");
    BitMatrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k)
        out.data_[k] ^= other.data_[k];
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < wpr_; ++k) {
            Word w = data_[i * wpr_ + k];
            while (w) {
                std::size_t j = k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
                out.set(j, i, true);
                w &= w - 1;
            }
        }
    return out;
}

namespace {

// In-place row echelon; returns rank. Shared by rank/inverse.
std::size_t eliminate(std::vector<Word>& rows, std::size_t nrows, std::size_t wpr,
                      std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < nrows; ++c) {
        std::size_t wi = c / kWordBits;
        Word mask = Word(1) << (c % kWordBits);
        std::size_t pivot = nrows;
        for (std::size_t i = r; i < nrows; ++i)
            if (rows[i * wpr + wi] & mask) {
                pivot = i;
                break;
            }
        if (pivot == nrows)
            continue;
        for (std::size_t k = 0; k < wpr; ++k)
            std::swap(rows[r * wpr + k], rows[pivot * wpr + k]);
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i != r && (rows[i * wpr + wi] & mask))
                for (std::size_t k = 0; k < wpr; ++k)
                    rows[i * wpr + k] ^= rows[r * wpr + k];
        }
        ++r;
    }
    return r;
}

} // namespace

std::size_t BitMatrix::rank() const {
    std::vector<Word> work = data_;
    return eliminate(work, rows_, wpr_, cols_);
}

bool BitMatrix::is_invertible() const {
    return is_square() && rank() == rows_;
}

BitMatrix BitMatrix::inverse() const {
    if (!is_square())
        throw std::invalid_argument("BitMatrix::inverse: non-square");
    const std::size_t n = rows_;
    const std::size_t w2 = words_for(2 * n);
    std::vector<Word> aug(n * w2, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (get(i, j))
                aug[i * w2 + j / kWordBits] |= Word(1) << (j % kWordBits);
        std::size_t j = n + i;
        aug[i * w2 + j / kWordBits] |= Word(1) << (j % kWordBits);
    }
    if (eliminate(aug, n, w2, n) != n)
        throw std::invalid_argument("BitMatrix::inverse: singular matrix");
    BitMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t c = n + j;
            if ((aug[i * w2 + c / kWordBits] >> (c % kWordBits)) & 1u)
                out.set(i, j, true);
        }
    return out;
}

bool BitMatrix::is_identity() const {
    return is_square() && *this == identity(rows_);
}

std::string BitMatrix::to_text() const {
    std::ostringstream os;
    os << "GF2 " << rows_ << ' ' << cols_ << '\n';
    for (std::size_t i = 0; i < rows_; ++i)
        os << row(i).to_string() << '\n';
    return os.str();
}

BitMatrix BitMatrix::parse_text(std::istream& in) {
    std::string tag;
    std::size_t rows = 0, cols = 0;
    if (!(in >> tag) || tag != "GF2" || !(in >> rows >> cols) || rows == 0 || cols == 0)
        throw parse_error("BitMatrix: expected header 'GF2 <rows> <cols>'");
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        std::string line;
        if (!(in >> line) || line.size() != cols)
            throw parse_error("BitMatrix: bad row " + std::to_string(i));
        m.set_row(i, BitVector::parse(line));
    }
    return m;
}

BitMatrix BitMatrix::parse_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    return parse_text(is);
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    return a * b;
}

BitMatrix mat_pow(const BitMatrix& a, std::uint64_t e) {
    if (!a.is_square())
        throw std::invalid_argument("mat_pow: non-square");
    BitMatrix acc = BitMatrix::identity(a.rows());
    BitMatrix base = a;
    while (e) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

} // namespace ep::gf2
