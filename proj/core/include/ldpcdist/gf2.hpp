#pragma once

#include "ldpcdist/bitmat.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ldpcdist {

/// Work counters accumulated by the elimination routines. Callers that do
/// not care pass nullptr.
struct Gf2Stats {
    std::uint64_t row_xors = 0;
    std::uint64_t eliminations = 0;
};

/// Row echelon form with deterministic pivoting: leftmost nonzero column,
/// topmost available row. pivot_cols[i] is the pivot column of row i.
struct Echelon {
    BitMatrix mat;
    std::vector<std::size_t> pivot_cols;
};

Echelon row_echelon(BitMatrix m, Gf2Stats* stats = nullptr);

std::size_t rank(const BitMatrix& m, Gf2Stats* stats = nullptr);

/// cols - rank; the log2 size of the nullspace.
std::size_t corank(const BitMatrix& m, Gf2Stats* stats = nullptr);

/// Columns of m at the (distinct, in-range) indices of J, ascending.
BitMatrix column_submatrix(const BitMatrix& m, std::span<const std::size_t> J);

/// Deterministic nullspace basis: cols - rank vectors x with m * x^T = 0.
std::vector<BitVector> nullspace_basis(const BitMatrix& m, Gf2Stats* stats = nullptr);

struct AffineSolution {
    BitVector particular;             // one x with m * x^T = y
    std::vector<BitVector> basis;     // nullspace basis; solutions = particular + span
};

/// Solve m * x^T = y; nullopt if inconsistent.
std::optional<AffineSolution> solve_affine(const BitMatrix& m, const BitVector& y,
                                           Gf2Stats* stats = nullptr);

} // namespace ldpcdist
