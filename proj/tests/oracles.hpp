// Independent reference implementations used only to check the library.
// Deliberately naive: plain integer matrices, full enumeration.
#pragma once

#include "ldpcdist/bitmat.hpp"
#include "ldpcdist/code.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace oracles {

using ldpcdist::BitMatrix;
using ldpcdist::BitVector;

using IntMatrix = std::vector<std::vector<int>>;

inline IntMatrix to_int(const BitMatrix& m) {
    IntMatrix a(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r][c] = m.get(r, c) ? 1 : 0;
    return a;
}

// O(n^3) elimination over the integers mod 2.
inline std::size_t naive_rank(IntMatrix a) {
    if (a.empty()) return 0;
    std::size_t rows = a.size(), cols = a[0].size(), rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (a[r][c] % 2) { piv = r; break; }
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] % 2 == 0) continue;
            for (std::size_t k = 0; k < cols; ++k) a[r][k] = (a[r][k] + a[rank][k]) % 2;
        }
        ++rank;
    }
    return rank;
}

// Minimum weight over all 2^k combinations of the generator rows, no Gray
// coding: rebuild every codeword from scratch.
inline std::size_t naive_min_distance(const ldpcdist::Code& code) {
    const auto& gen = code.generators();
    const std::size_t k = gen.size(), n = code.n();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << k); ++mask) {
        BitVector c(n);
        for (std::size_t j = 0; j < k; ++j)
            if ((mask >> j) & 1) c ^= gen[j];
        std::size_t w = c.weight();
        if (w < best) best = w;
    }
    return best;
}

// All codewords agreeing with c_I on I, by scanning every codeword.
inline std::vector<BitVector> naive_completions(const ldpcdist::Code& code,
                                                const std::vector<std::size_t>& I,
                                                const BitVector& c_I) {
    const auto& gen = code.generators();
    const std::size_t k = gen.size(), n = code.n();
    std::vector<BitVector> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
        BitVector c(n);
        for (std::size_t j = 0; j < k; ++j)
            if ((mask >> j) & 1) c ^= gen[j];
        bool agree = true;
        for (std::size_t j = 0; j < I.size() && agree; ++j)
            if (c.get(I[j]) != c_I.get(j)) agree = false;
        if (agree) out.push_back(c);
    }
    return out;
}

// Dimension of {c in C : c_I = 0} by counting codewords vanishing on I.
inline std::size_t naive_shortened_dim(const ldpcdist::Code& code,
                                       const std::vector<std::size_t>& I) {
    BitVector zero(I.size());
    std::size_t count = naive_completions(code, I, zero).size();
    std::size_t dim = 0;
    while ((std::size_t(1) << dim) < count) ++dim;
    return dim;
}

// Minimum weight e (over all e of weight <= cap) with H e^T = v.
inline std::size_t naive_coset_leader_weight(const ldpcdist::Code& code, const BitVector& v,
                                             std::size_t cap) {
    const std::size_t n = code.n();
    auto next_combo = [n](std::vector<std::size_t>& combo) {
        const std::size_t w = combo.size();
        for (std::size_t i = w; i-- > 0;) {
            if (combo[i] < n - (w - i)) {
                ++combo[i];
                for (std::size_t j = i + 1; j < w; ++j) combo[j] = combo[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    for (std::size_t w = 1; w <= cap; ++w) {
        std::vector<std::size_t> combo(w);
        for (std::size_t i = 0; i < w; ++i) combo[i] = i;
        do {
            BitVector e(n);
            for (auto c : combo) e.set(c);
            if (code.syndrome(e) == v) return w;
        } while (next_combo(combo));
    }
    return std::numeric_limits<std::size_t>::max();
}

// Standard [7,4] Hamming parity-check matrix, distance 3.
inline BitMatrix hamming74() {
    return BitMatrix::from_strings({
        "1010101",
        "0110011",
        "0001111",
    });
}

} // namespace oracles
