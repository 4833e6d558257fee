#include "ldpcdist/distance.hpp"
#include "ldpcdist/ensembles.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace ldpcdist;

namespace {

double binom(std::size_t a, std::size_t b) {
    double v = 1.0;
    for (std::size_t i = 0; i < b; ++i) v = v * double(a - i) / double(i + 1);
    return v;
}

Code hamming() { return Code(oracles::hamming74()); }

} // namespace

TEST_CASE("distance_exhaustive") {
    auto res = distance_exhaustive(hamming());
    REQUIRE(res.distance);
    CHECK(*res.distance == 3);
    CHECK(res.certificate == Certificate::exact);
    REQUIRE(res.witness);
    CHECK(res.witness->weight() == 3);
    CHECK(hamming().is_codeword(*res.witness));

    Code rep(BitMatrix::from_strings({"11"}));
    auto r2 = distance_exhaustive(rep);
    CHECK(*r2.distance == 2);

    // matches naive enumeration without Gray coding
    Code code(sample_a(EnsembleSpec{3, 6, 12}, 1));
    CHECK(*distance_exhaustive(code).distance == oracles::naive_min_distance(code));

    // dimension cap
    Code big(BitMatrix(2, 40));
    auto capped = distance_exhaustive(big, 28);
    CHECK(capped.certificate == Certificate::inconclusive);
    CHECK(capped.reason == "dimension cap");
}

TEST_CASE("erasure_complete") {
    Code code = hamming();
    std::vector<std::size_t> all(7);
    std::iota(all.begin(), all.end(), 0);

    auto word = distance_exhaustive(code).witness.value();
    auto ec = erasure_complete(code, all, word, 1 << 10);
    CHECK(ec.conclusive);
    REQUIRE(ec.completions.size() == 1);
    CHECK(ec.completions[0] == word);

    BitVector non_cw(7);
    non_cw.set(0);
    auto none = erasure_complete(code, all, non_cw, 1 << 10);
    CHECK(none.conclusive);
    CHECK(none.completions.empty());

    // |J| = 3: the [7,4] code corrects any 3 erasures uniquely (b = 0)
    std::vector<std::size_t> I{0, 1, 2, 3};
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
        BitVector c_i(4);
        for (int j = 0; j < 4; ++j)
            if ((mask >> j) & 1) c_i.set(j);
        auto got = erasure_complete(code, I, c_i, 1 << 10);
        auto want = oracles::naive_completions(code, I, c_i);
        CHECK(got.conclusive);
        REQUIRE(got.completions.size() == want.size());
        for (const auto& c : got.completions) {
            CHECK(code.is_codeword(c));
            CHECK(std::find(want.begin(), want.end(), c) != want.end());
        }
    }

    CHECK_THROWS(erasure_complete(code, I, BitVector(3), 1 << 10));
}

TEST_CASE("erasure_complete returns 0 or 2^corank completions") {
    for (int trial = 0; trial < 30; ++trial) {
        Code code(sample_a(EnsembleSpec{3, 6, 12}, 300 + trial));
        Rng rng(trial);
        std::size_t isize = 5 + rng.below(6);
        auto I = rng.subset(12, isize);
        std::sort(I.begin(), I.end());
        BitVector c_i(isize);
        for (std::size_t j = 0; j < isize; ++j)
            if (rng.next() & 1) c_i.set(j);
        auto ec = erasure_complete(code, I, c_i, 1 << 16);
        REQUIRE(ec.conclusive);
        if (!ec.completions.empty())
            CHECK(ec.completions.size() == (std::size_t(1) << ec.corank));
        auto want = oracles::naive_completions(code, I, c_i);
        CHECK(ec.completions.size() == want.size());
    }
}

TEST_CASE("distance_sw") {
    auto res = distance_sw(hamming(), {0.3, 0, 1 << 20, true});
    REQUIRE(res.distance);
    CHECK(*res.distance == 3);
    CHECK(res.certificate == Certificate::exact);
    CHECK(res.witness->weight() == 3);
    CHECK(hamming().is_codeword(*res.witness));
}

TEST_CASE("distance_sw matches exhaustive") {
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t n = 16 + 4 * (trial % 3); // 16, 20, 24
        Code code(sample_a(EnsembleSpec{3, 6, n}, 500 + trial));
        auto oracle = distance_exhaustive(code);
        auto sw = distance_sw(code, {0.4, 0, 1 << 20, true});
        REQUIRE(sw.certificate == Certificate::exact);
        CHECK(*sw.distance == *oracle.distance);
        CHECK(code.is_codeword(*sw.witness));
        CHECK(sw.witness->weight() == *sw.distance);
    }
}

TEST_CASE("distance_sw pattern counter identity") {
    Code code(sample_a(EnsembleSpec{3, 6, 16}, 77));
    auto oracle = distance_exhaustive(code);
    SwOptions opts{0.4, 0, 1 << 20, false}; // early exit disabled
    auto sw = distance_sw(code, opts);
    REQUIRE(sw.certificate == Certificate::exact);
    REQUIRE(*sw.distance == *oracle.distance);

    const std::size_t n = 16;
    const std::size_t s = std::size_t(std::ceil((1.0 - opts.theta) * n));
    std::uint64_t expected = 0;
    for (unsigned d = 1; d <= *sw.distance; ++d) {
        std::size_t v_lo = (d * s) / n, v_hi = (d * s + n - 1) / n;
        std::vector<std::size_t> vs{v_lo};
        if (v_hi != v_lo) vs.push_back(v_hi);
        for (std::size_t v : vs) {
            if (v > s || v > d || d - v > n - s) continue;
            expected += std::uint64_t(n * binom(s, v) + 0.5);
        }
    }
    CHECK(sw.counters.patterns == expected);
}

TEST_CASE("distance_mb") {
    auto res = distance_mb(hamming(), {});
    REQUIRE(res.distance);
    CHECK(*res.distance == 3);
    CHECK(res.certificate == Certificate::exact);
    CHECK(hamming().is_codeword(*res.witness));

    Code rep(BitMatrix::from_strings({"11"}));
    auto r2 = distance_mb(rep, {});
    CHECK(*r2.distance == 2);
}

TEST_CASE("distance_mb matches exhaustive") {
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t n = (trial % 2) ? 18 : 24;
        Code code(sample_b(EnsembleSpec{3, 6, n}, 600 + trial));
        auto oracle = distance_exhaustive(code);
        auto mb = distance_mb(code, {});
        REQUIRE(mb.certificate == Certificate::exact);
        CHECK(*mb.distance == *oracle.distance);
        CHECK(code.is_codeword(*mb.witness));
    }
}

TEST_CASE("distance_mb pattern counter identity") {
    Code code(sample_a(EnsembleSpec{3, 6, 16}, 88));
    auto mb = distance_mb(code, {0, 1 << 20, false}); // early exit disabled
    REQUIRE(mb.certificate == Certificate::exact);

    const std::size_t n = 16, s_l = 8, s_r = 8;
    std::uint64_t expected = 0;
    for (unsigned d = 1; d <= *mb.distance; ++d) {
        std::size_t v_l = d / 2, v_r = d - v_l;
        expected += std::uint64_t(n * (binom(s_l, v_l) + binom(s_r, v_r)) + 0.5);
    }
    CHECK(mb.counters.patterns == expected);
}

TEST_CASE("covering_trials") {
    CHECK(covering_trials(10, 10, 3) == 24); // ceil(10 ln 10)
    CHECK(covering_trials(10, 5, 2) == 104); // ceil(4.5 * 23.0259)
    CHECK(covering_trials(10, 4, 0) == 24);  // d=0: ratio 1
    CHECK(covering_trials(16, 9, 0) == std::uint64_t(std::ceil(16 * std::log(16.0))));
    CHECK_THROWS(covering_trials(10, 11, 3));
    CHECK_THROWS(covering_trials(10, 5, 6));
}

TEST_CASE("distance_cs") {
    auto res = distance_cs(hamming(), {0.6, 0, 20, 3, 1});
    REQUIRE(res.distance);
    CHECK(*res.distance == 3);
    CHECK(res.certificate == Certificate::probabilistic);
    CHECK(res.confidence > 0.99);
    CHECK(hamming().is_codeword(*res.witness));
    CHECK(res.witness->weight() == 3);
}

TEST_CASE("distance_cs never under-reports") {
    int equal = 0;
    const int trials = 20;
    for (int trial = 0; trial < trials; ++trial) {
        std::size_t n = 20 + 4 * (trial % 3);
        Code code(sample_a(EnsembleSpec{3, 6, n}, 700 + trial));
        auto oracle = distance_exhaustive(code);
        auto cs = distance_cs(code, {0.45, 0, 20, std::uint64_t(trial), 1});
        REQUIRE(cs.distance);
        CHECK(*cs.distance >= *oracle.distance);
        if (*cs.distance == *oracle.distance) ++equal;
        CHECK(code.is_codeword(*cs.witness));
        CHECK(cs.witness->weight() == *cs.distance);
    }
    CHECK(equal == trials); // coverage schedule makes misses vanishingly rare here
}

TEST_CASE("distance_cs trial counter equals the schedule on failing weights") {
    Code code = hamming(); // distance 3
    auto res = distance_cs(code, {0.6, 2, 20, 5, 1}); // d_max = 2 < distance
    CHECK(res.certificate == Certificate::inconclusive);
    const std::size_t s = std::size_t(0.6 * 7);
    CHECK(res.counters.trials == covering_trials(7, s, 1) + covering_trials(7, s, 2));
    CHECK(res.counters.eliminations == res.counters.trials);
}

TEST_CASE("cs_decode") {
    Code code = hamming();
    // every nonzero syndrome of a perfect code has a weight-1 coset leader
    for (std::size_t c = 0; c < 7; ++c) {
        BitVector e(7);
        e.set(c);
        BitVector v = code.syndrome(e);
        auto res = cs_decode(code, v, {0.6, 0, 20, 11, 1});
        REQUIRE(res.distance);
        CHECK(*res.distance == 1);
        CHECK(code.syndrome(*res.witness) == v);
    }
    CHECK_THROWS(cs_decode(code, BitVector(3), {0.6, 0, 20, 1, 1}));
}

TEST_CASE("cs_decode planted errors vs coset leader") {
    for (int trial = 0; trial < 15; ++trial) {
        Code code(sample_a(EnsembleSpec{3, 6, 20}, 800 + trial));
        Rng rng(trial);
        BitVector e(20);
        auto pos = rng.subset(20, 3);
        for (auto p : pos) e.set(p);
        BitVector v = code.syndrome(e);
        if (!v.any()) continue; // planted a codeword; out of scope here
        auto res = cs_decode(code, v, {0.45, 0, 20, std::uint64_t(trial), 1});
        REQUIRE(res.distance);
        CHECK(*res.distance <= 3);
        CHECK(code.syndrome(*res.witness) == v);
        CHECK(res.witness->weight() == *res.distance);
        std::size_t leader = oracles::naive_coset_leader_weight(code, v, 4);
        CHECK(*res.distance == leader);
    }
}

TEST_CASE("determinism across thread counts") {
    Code code(sample_a(EnsembleSpec{3, 6, 24}, 999));
    CsOptions base{0.45, 0, 20, 1234, 1};
    auto one = distance_cs(code, base);
    for (unsigned threads : {2u, 4u, 8u}) {
        CsOptions opts = base;
        opts.threads = threads;
        auto multi = distance_cs(code, opts);
        CHECK(one.distance == multi.distance);
        CHECK(one.witness == multi.witness);
        CHECK(one.counters == multi.counters);
    }
    auto again = distance_cs(code, base);
    CHECK(one.counters == again.counters);
    CHECK(one.witness == again.witness);

    BitVector e(24);
    e.set(3);
    e.set(17);
    BitVector v = code.syndrome(e);
    if (v.any()) {
        auto d1 = cs_decode(code, v, base);
        CsOptions opts = base;
        opts.threads = 8;
        auto d8 = cs_decode(code, v, opts);
        CHECK(d1.distance == d8.distance);
        CHECK(d1.witness == d8.witness);
        CHECK(d1.counters == d8.counters);
    }
}

TEST_CASE("row_xor counters nondecreasing in d_max") {
    Code code(sample_a(EnsembleSpec{3, 6, 16}, 321)); // distance >= 2 generically
    auto short_run = distance_sw(code, {0.4, 1, 1 << 20, true});
    auto long_run = distance_sw(code, {0.4, 4, 1 << 20, true});
    CHECK(long_run.counters.row_xors >= short_run.counters.row_xors);
}
