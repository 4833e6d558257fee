#pragma once

#include <cstdint>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ldpcdist {

/// Packed binary vector over GF(2). Bits beyond size() are kept zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    /// Parse "10110" (bit 0 first).
    static BitVector from_string(std::string_view bits);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= mask;
        else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    std::size_t weight() const;
    bool any() const;

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { a ^= b; return a; }

    bool operator==(const BitVector&) const = default;
    /// Lexicographic on the packed words; used as a sort key for syndromes.
    bool lex_less(const BitVector& o) const { return words_ < o.words_; }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    std::string to_string() const;
    /// Little-endian bytes as lowercase hex (bit i lives in byte i/8, position i%8).
    std::string to_hex() const;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

inline std::size_t weight(const BitVector& v) { return v.weight(); }

/// Row-major packed binary matrix.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<BitVector>& rows);
    /// Rows given as bit strings, e.g. {"110", "011"}.
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v = true) {
        std::uint64_t mask = std::uint64_t(1) << (c & 63);
        if (v) data_[r * wpr_ + (c >> 6)] |= mask;
        else data_[r * wpr_ + (c >> 6)] &= ~mask;
    }

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    BitVector column(std::size_t c) const;

    /// dst ^= src, word-parallel.
    void xor_rows(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    std::size_t row_weight(std::size_t r) const { return row(r).weight(); }
    std::size_t column_weight(std::size_t c) const;

    /// M * x^T over GF(2); x.size() must equal cols().
    BitVector mul(const BitVector& x) const;
    BitMatrix transposed() const;

    bool operator==(const BitMatrix&) const = default;

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {data_.data() + r * wpr_, wpr_};
    }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

} // namespace ldpcdist
