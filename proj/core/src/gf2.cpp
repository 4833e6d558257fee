#include "ldpcdist/gf2.hpp"

#include <stdexcept>

namespace ldpcdist {

Echelon row_echelon(BitMatrix m, Gf2Stats* stats) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t pr = 0; // next pivot row
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t r = pr; r < rows; ++r) {
            if (m.get(r, c)) { sel = r; break; }
        }
        if (sel == rows) continue;
        m.swap_rows(pr, sel);
        // reduced form: clear the pivot column everywhere else
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != pr && m.get(r, c)) {
                m.xor_rows(r, pr);
                if (stats) ++stats->row_xors;
            }
        }
        pivots.push_back(c);
        ++pr;
    }
    if (stats) ++stats->eliminations;
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m, Gf2Stats* stats) {
    return row_echelon(m, stats).pivot_cols.size();
}

std::size_t corank(const BitMatrix& m, Gf2Stats* stats) {
    return m.cols() - rank(m, stats);
}

BitMatrix column_submatrix(const BitMatrix& m, std::span<const std::size_t> J) {
    BitMatrix out(m.rows(), J.size());
    for (std::size_t j = 0; j < J.size(); ++j) {
        if (J[j] >= m.cols()) throw std::out_of_range("column_submatrix: index out of range");
        if (j > 0 && J[j] <= J[j - 1])
            throw std::invalid_argument("column_submatrix: indices must be strictly ascending");
    }
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t j = 0; j < J.size(); ++j)
            if (m.get(r, J[j])) out.set(r, j);
    return out;
}

static std::vector<BitVector> nullspace_from_echelon(const Echelon& e, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<BitVector> basis;
    basis.reserve(cols - e.pivot_cols.size());
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        BitVector x(cols);
        x.set(f);
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
            if (e.mat.get(i, f)) x.set(e.pivot_cols[i]);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<BitVector> nullspace_basis(const BitMatrix& m, Gf2Stats* stats) {
    Echelon e = row_echelon(m, stats);
    return nullspace_from_echelon(e, m.cols());
}

std::optional<AffineSolution> solve_affine(const BitMatrix& m, const BitVector& y,
                                           Gf2Stats* stats) {
    if (y.size() != m.rows()) throw std::invalid_argument("solve_affine: dimension mismatch");
    const std::size_t cols = m.cols();
    BitMatrix aug(m.rows(), cols + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < cols; ++c)
            if (m.get(r, c)) aug.set(r, c);
        if (y.get(r)) aug.set(r, cols);
    }
    Echelon e = row_echelon(std::move(aug), stats);
    for (auto c : e.pivot_cols)
        if (c == cols) return std::nullopt; // pivot in augmented column: inconsistent

    AffineSolution sol;
    sol.particular = BitVector(cols);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
        if (e.mat.get(i, cols)) sol.particular.set(e.pivot_cols[i]);

    // Nullspace of m from the same echelon form, ignoring the augmented column.
    Echelon trimmed;
    trimmed.pivot_cols = e.pivot_cols;
    trimmed.mat = std::move(e.mat);
    sol.basis = nullspace_from_echelon(trimmed, cols);
    return sol;
}

} // namespace ldpcdist
