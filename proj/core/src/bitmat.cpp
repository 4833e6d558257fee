#include "ldpcdist/bitmat.hpp"

#include <bit>
#include <stdexcept>

namespace ldpcdist {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') v.set(i);
        else if (bits[i] != '0') throw std::invalid_argument("BitVector::from_string: bad char");
    }
    return v;
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (auto word : words_) w += std::popcount(word);
    return w;
}

bool BitVector::any() const {
    for (auto word : words_)
        if (word) return true;
    return false;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (len_ != o.len_) throw std::invalid_argument("BitVector xor: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::string BitVector::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::size_t nbytes = (len_ + 7) / 8;
    std::string s;
    s.reserve(2 * nbytes);
    for (std::size_t b = 0; b < nbytes; ++b) {
        unsigned byte = (words_[b >> 3] >> ((b & 7) * 8)) & 0xffu;
        s.push_back(digits[byte >> 4]);
        s.push_back(digits[byte & 0xf]);
    }
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows) {
    if (rows.empty()) return {};
    BitMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    std::vector<BitVector> v;
    v.reserve(rows.size());
    for (const auto& s : rows) v.push_back(BitVector::from_string(s));
    return from_rows(v);
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    auto dst = v.words();
    for (std::size_t i = 0; i < wpr_; ++i) dst[i] = data_[r * wpr_ + i];
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::set_row: length mismatch");
    auto src = v.words();
    for (std::size_t i = 0; i < wpr_; ++i) data_[r * wpr_ + i] = src[i];
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r);
    return v;
}

void BitMatrix::xor_rows(std::size_t dst, std::size_t src) {
    std::uint64_t* d = data_.data() + dst * wpr_;
    const std::uint64_t* s = data_.data() + src * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::uint64_t* pa = data_.data() + a * wpr_;
    std::uint64_t* pb = data_.data() + b * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) std::swap(pa[i], pb[i]);
}

std::size_t BitMatrix::column_weight(std::size_t c) const {
    std::size_t w = 0;
    for (std::size_t r = 0; r < rows_; ++r) w += get(r, c);
    return w;
}

BitVector BitMatrix::mul(const BitVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("BitMatrix::mul: dimension mismatch");
    BitVector y(rows_);
    auto xw = x.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        const std::uint64_t* rw = data_.data() + r * wpr_;
        for (std::size_t i = 0; i < wpr_; ++i) acc ^= rw[i] & xw[i];
        if (std::popcount(acc) & 1) y.set(r);
    }
    return y;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r);
    return t;
}

} // namespace ldpcdist
