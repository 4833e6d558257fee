#include "ldpcdist/ensembles.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace ldpcdist {

void EnsembleSpec::validate(bool for_ensemble_b) const {
    unsigned min_ell = allow_low_weight ? 2 : 3;
    if (ell < min_ell)
        throw std::invalid_argument("ensemble: column weight ell=" + std::to_string(ell) +
                                    " below minimum " + std::to_string(min_ell));
    if (emm < ell)
        throw std::invalid_argument("ensemble: row weight m must be >= ell");
    if (n == 0) throw std::invalid_argument("ensemble: n must be positive");
    if ((n * ell) % emm != 0)
        throw std::invalid_argument("ensemble: n*ell=" + std::to_string(n * ell) +
                                    " not divisible by m=" + std::to_string(emm));
    if (for_ensemble_b) {
        if (n % emm != 0)
            throw std::invalid_argument("ensemble B: m must divide n");
        if (r() % ell != 0)
            throw std::invalid_argument("ensemble B: ell must divide r");
    }
}

BitMatrix sample_a(const EnsembleSpec& spec, std::uint64_t seed, int max_attempts) {
    spec.validate();
    const std::size_t n = spec.n, r = spec.r();
    const std::size_t edges = n * spec.ell; // == r * emm

    // Check sockets listed row by row; a shuffle of this list is a uniform
    // matching, and conditioning on no repeated (row, column) pair makes the
    // resulting simple matrix uniform over the regular ensemble.
    std::vector<std::size_t> socket_row(edges);
    for (std::size_t p = 0; p < edges; ++p) socket_row[p] = p / spec.emm;

    Rng rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        rng.shuffle(socket_row);
        BitMatrix h(r, n);
        bool simple = true;
        for (std::size_t p = 0; p < edges && simple; ++p) {
            std::size_t row = socket_row[p], col = p / spec.ell;
            if (h.get(row, col)) simple = false;
            else h.set(row, col);
        }
        if (simple) return h;
    }
    throw std::runtime_error("sample_a: rejection budget exhausted after " +
                             std::to_string(max_attempts) + " attempts (ell=" +
                             std::to_string(spec.ell) + ", m=" + std::to_string(spec.emm) + ")");
}

BitMatrix sample_b(const EnsembleSpec& spec, std::uint64_t seed) {
    spec.validate(true);
    const std::size_t n = spec.n, r = spec.r();
    const std::size_t p = r / spec.ell; // unit-block size, == n / emm

    // Column c of the first block has its single 1 at row c mod p.
    BitMatrix h(r, n);
    Rng rng(seed);
    std::vector<std::size_t> perm(n);
    for (unsigned blk = 0; blk < spec.ell; ++blk) {
        std::iota(perm.begin(), perm.end(), 0);
        if (blk > 0) rng.shuffle(perm);
        for (std::size_t c = 0; c < n; ++c)
            h.set(blk * p + (perm[c] % p), c);
    }
    return h;
}

bool validate_regular(const BitMatrix& h, const EnsembleSpec& spec) {
    if (h.rows() != spec.r() || h.cols() != spec.n) return false;
    for (std::size_t r = 0; r < h.rows(); ++r)
        if (h.row_weight(r) != spec.emm) return false;
    for (std::size_t c = 0; c < h.cols(); ++c)
        if (h.column_weight(c) != spec.ell) return false;
    return true;
}

} // namespace ldpcdist
