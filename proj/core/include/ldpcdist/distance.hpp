#pragma once

#include "ldpcdist/code.hpp"
#include "ldpcdist/rng.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ldpcdist {

enum class Certificate { exact, probabilistic, inconclusive };

const char* to_string(Certificate c);

struct Counters {
    std::uint64_t row_xors = 0;       // word-parallel row additions
    std::uint64_t patterns = 0;       // candidate vectors enumerated
    std::uint64_t trials = 0;         // covering-set trials run
    std::uint64_t eliminations = 0;   // Gaussian eliminations performed
    std::uint64_t skipped_bcap = 0;   // trials skipped for exceeding the co-rank cap

    Counters& operator+=(const Counters& o) {
        row_xors += o.row_xors;
        patterns += o.patterns;
        trials += o.trials;
        eliminations += o.eliminations;
        skipped_bcap += o.skipped_bcap;
        return *this;
    }
    bool operator==(const Counters&) const = default;
};

struct DistanceResult {
    std::optional<unsigned> distance;
    std::optional<BitVector> witness;
    Certificate certificate = Certificate::inconclusive;
    double confidence = 1.0;   // meaningful for Certificate::probabilistic
    std::string reason;        // set when inconclusive
    Counters counters;
};

/// Eq.-(14)-style trial count for an (n,s,d)-covering: ceil of
/// C(n,d)/C(s,d) * n * ln n, at least 1. Computed in log space.
std::uint64_t covering_trials(std::size_t n, std::size_t s, std::size_t d);

/// Reproducible covering-set schedule.
struct CoveringPlan {
    std::size_t s = 0;
    unsigned d = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

/// Exact minimum weight by Gray-code enumeration of all 2^dim codewords.
/// dim > dim_cap yields inconclusive("dimension cap").
DistanceResult distance_exhaustive(const Code& code, unsigned dim_cap = 28);

struct ErasureCompletion {
    bool conclusive = true;
    std::size_t corank = 0;                // co-rank b of H_J
    std::vector<BitVector> completions;    // 0 or 2^b full-length codewords
};

/// All codewords agreeing with c_I on the (ascending) index set I, found by
/// solving H_J c_J^T = H_I c_I^T on the complement J. When 2^corank would
/// exceed enum_cap the coset is not enumerated and conclusive is false.
ErasureCompletion erasure_complete(const Code& code, std::span<const std::size_t> I,
                                   const BitVector& c_I, std::uint64_t enum_cap,
                                   Counters* counters = nullptr);

struct SwOptions {
    double theta = 0.45;
    unsigned d_max = 0;               // 0 means n
    std::uint64_t enum_cap = 1u << 20;
    bool early_exit = true;
};

/// Sliding-window search: window length s = ceil((1-theta) n), candidate
/// window weights floor(d s / n) and ceil(d s / n), erasure completion on the
/// complement. Exact when no cap fires.
DistanceResult distance_sw(const Code& code, const SwOptions& opts);

struct MbOptions {
    unsigned d_max = 0;               // 0 means n
    std::uint64_t list_cap = 1u << 22;
    bool early_exit = true;
};

/// Matching-bipartition search: weight-floor(d/2) left patterns matched to
/// weight-ceil(d/2) right patterns by sorted syndromes, over all n cyclic
/// bipartition starts. Exact when the list cap does not fire.
DistanceResult distance_mb(const Code& code, const MbOptions& opts);

struct CsOptions {
    double theta = 0.45;
    unsigned d_max = 0;               // 0 means floor(theta n)
    unsigned b_cap = 20;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

/// Covering-set search: per weight d, covering_trials(n,s,d) random s-subsets
/// J; Gray enumeration of the 2^b - 1 nonzero codewords of each shortened
/// code within the co-rank cap. Probabilistic certificate on success.
DistanceResult distance_cs(const Code& code, const CsOptions& opts);

/// Covering-set syndrome decoding: minimum-weight e with H e^T = v, v != 0.
/// The witness satisfies H e^T = v rather than H e^T = 0.
DistanceResult cs_decode(const Code& code, const BitVector& v, const CsOptions& opts);

} // namespace ldpcdist
