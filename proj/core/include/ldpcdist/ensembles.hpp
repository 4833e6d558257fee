#pragma once

#include "ldpcdist/bitmat.hpp"
#include "ldpcdist/rng.hpp"

#include <cstdint>

namespace ldpcdist {

/// (ell, m)-regular ensemble description: all column weights ell, all row
/// weights m, r = n*ell/m checks, design rate R = 1 - ell/m.
struct EnsembleSpec {
    unsigned ell = 0;       // column weight
    unsigned emm = 0;       // row weight
    std::size_t n = 0;      // block length
    bool allow_low_weight = false; // permit ell == 2

    std::size_t r() const { return n * ell / emm; }
    double alpha() const { return double(ell) / double(emm); }
    double design_rate() const { return 1.0 - alpha(); }

    /// Throws std::invalid_argument with a message on any violation.
    /// Ensemble B additionally needs emm | n and ell | r.
    void validate(bool for_ensemble_b = false) const;
};

/// Uniform sample from the regular ensemble: configuration-model matching of
/// n*ell variable sockets to r*m check sockets, resampled whenever a
/// (row, column) pair is hit twice. Throws if max_attempts rejections occur.
BitMatrix sample_a(const EnsembleSpec& spec, std::uint64_t seed, int max_attempts = 10000);

/// Gallager construction: first block [I | I | ... | I] of (r/ell)-sized unit
/// matrices, remaining ell-1 blocks are seeded column permutations of it.
BitMatrix sample_b(const EnsembleSpec& spec, std::uint64_t seed);

/// True iff h is r x n with all column weights ell and row weights m.
bool validate_regular(const BitMatrix& h, const EnsembleSpec& spec);

} // namespace ldpcdist
