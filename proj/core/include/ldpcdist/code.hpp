#pragma once

#include "ldpcdist/bitmat.hpp"
#include "ldpcdist/gf2.hpp"

#include <utility>
#include <vector>

namespace ldpcdist {

/// A linear code given by its parity-check matrix, with rank and nullspace
/// basis (generator rows) cached at construction.
class Code {
public:
    explicit Code(BitMatrix h)
        : h_(std::move(h)), generators_(nullspace_basis(h_)) {}

    const BitMatrix& h() const { return h_; }
    std::size_t n() const { return h_.cols(); }
    std::size_t num_checks() const { return h_.rows(); }
    std::size_t dim() const { return generators_.size(); }
    std::size_t rank() const { return n() - dim(); }

    const std::vector<BitVector>& generators() const { return generators_; }

    BitVector syndrome(const BitVector& e) const { return h_.mul(e); }
    bool is_codeword(const BitVector& c) const { return c.size() == n() && !syndrome(c).any(); }

private:
    BitMatrix h_;
    std::vector<BitVector> generators_;
};

} // namespace ldpcdist
