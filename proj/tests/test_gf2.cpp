#include "ldpcdist/gf2.hpp"
#include "ldpcdist/code.hpp"
#include "ldpcdist/ensembles.hpp"
#include "ldpcdist/rng.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace ldpcdist;

static BitMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.next() & 1) m.set(r, c);
    return m;
}

TEST_CASE("weight") {
    CHECK(BitVector(8).weight() == 0);
    BitVector ones(7);
    for (std::size_t i = 0; i < 7; ++i) ones.set(i);
    CHECK(ones.weight() == 7);
    CHECK(BitVector::from_string("10110").weight() == 3);
}

TEST_CASE("rank basics") {
    CHECK(rank(BitMatrix::identity(3)) == 3);
    CHECK(rank(BitMatrix::from_strings({"1011", "1011"})) == 1);
}

TEST_CASE("rank matches naive elimination oracle") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        BitMatrix m = random_matrix(6, 12, rng);
        CHECK(rank(m) == oracles::naive_rank(oracles::to_int(m)));
    }
}

TEST_CASE("rank is pure") {
    Rng rng(12);
    BitMatrix m = random_matrix(5, 9, rng);
    BitMatrix copy = m;
    (void)rank(m);
    CHECK(m == copy);
}

TEST_CASE("column_submatrix") {
    Rng rng(13);
    BitMatrix m = random_matrix(4, 8, rng);
    std::vector<std::size_t> all(8);
    std::iota(all.begin(), all.end(), 0);
    CHECK(column_submatrix(m, all) == m);

    BitMatrix id3 = BitMatrix::identity(3);
    std::vector<std::size_t> mid{1};
    BitMatrix col = column_submatrix(id3, mid);
    CHECK(col.rows() == 3);
    CHECK(col.cols() == 1);
    CHECK(col.get(1, 0));
    CHECK(col.column_weight(0) == 1);

    std::vector<std::size_t> bad{2, 2};
    CHECK_THROWS(column_submatrix(id3, bad));
    std::vector<std::size_t> oob{5};
    CHECK_THROWS(column_submatrix(id3, oob));

    // rank of an extracted submatrix agrees with the oracle
    for (int trial = 0; trial < 20; ++trial) {
        BitMatrix h = random_matrix(6, 12, rng);
        auto idx = Rng(trial).subset(12, 7);
        std::sort(idx.begin(), idx.end());
        BitMatrix sub = column_submatrix(h, idx);
        CHECK(rank(sub) == oracles::naive_rank(oracles::to_int(sub)));
    }
}

TEST_CASE("corank basics") {
    CHECK(corank(BitMatrix::identity(4)) == 0);
    CHECK(corank(BitMatrix(3, 5)) == 5);
}

TEST_CASE("corank equality on complementary splits") {
    // b(H_J) = b(G_I^T) where G spans the nullspace of H.
    Rng rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        EnsembleSpec spec{3, 6, 12};
        Code code(sample_a(spec, 100 + trial));
        auto split = Rng(trial).subset(12, 7);
        std::sort(split.begin(), split.end());
        std::vector<std::size_t> I(split.begin(), split.end()), J;
        std::vector<bool> in_i(12, false);
        for (auto p : I) in_i[p] = true;
        for (std::size_t c = 0; c < 12; ++c)
            if (!in_i[c]) J.push_back(c);

        BitMatrix g = BitMatrix::from_rows(code.generators());
        BitMatrix g_i = column_submatrix(g, I);
        std::size_t b_g = g.rows() - rank(g_i); // k - rank G_I
        std::size_t b_h = corank(column_submatrix(code.h(), J));
        CHECK(b_g == b_h);
    }
}

TEST_CASE("nullspace_basis") {
    CHECK(nullspace_basis(BitMatrix::identity(5)).empty());

    auto rep = nullspace_basis(BitMatrix::from_strings({"11"}));
    REQUIRE(rep.size() == 1);
    CHECK(rep[0] == BitVector::from_string("11"));

    BitMatrix h = oracles::hamming74();
    auto basis = nullspace_basis(h);
    CHECK(basis.size() == 4); // 7 - 3
    for (const auto& x : basis) CHECK_FALSE(h.mul(x).any());
}

TEST_CASE("solve_affine") {
    BitVector y = BitVector::from_string("101");
    auto sol = solve_affine(BitMatrix::identity(3), y);
    REQUIRE(sol);
    CHECK(sol->particular == y);
    CHECK(sol->basis.empty());

    auto two = solve_affine(BitMatrix::from_strings({"11"}), BitVector::from_string("1"));
    REQUIRE(two);
    CHECK(two->basis.size() == 1);
    CHECK(two->basis[0] == BitVector::from_string("11"));
    CHECK(two->particular.weight() == 1);

    // inconsistent: zero matrix, nonzero rhs
    CHECK_FALSE(solve_affine(BitMatrix(2, 3), BitVector::from_string("01")));

    CHECK_THROWS(solve_affine(BitMatrix(2, 3), BitVector(3)));
}

TEST_CASE("solve_affine solutions are exact") {
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        BitMatrix m = random_matrix(5, 9, rng);
        BitVector x(9);
        for (std::size_t i = 0; i < 9; ++i)
            if (rng.next() & 1) x.set(i);
        BitVector y = m.mul(x);
        auto sol = solve_affine(m, y);
        REQUIRE(sol);
        CHECK(m.mul(sol->particular) == y);
        for (const auto& b : sol->basis) {
            BitVector shifted = sol->particular ^ b;
            CHECK(m.mul(shifted) == y);
        }
    }
}

TEST_CASE("rank + nullity = cols") {
    Rng rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        BitMatrix m = random_matrix(1 + rng.below(8), 1 + rng.below(12), rng);
        CHECK(rank(m) + nullspace_basis(m).size() == m.cols());
    }
}

TEST_CASE("rank invariant under row permutation and row addition") {
    Rng rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        BitMatrix m = random_matrix(6, 10, rng);
        std::size_t base = rank(m);

        BitMatrix perm = m;
        perm.swap_rows(rng.below(6), rng.below(6));
        CHECK(rank(perm) == base);

        BitMatrix added = m;
        std::size_t a = rng.below(6), b = rng.below(6);
        if (a != b) added.xor_rows(a, b);
        CHECK(rank(added) == base);
    }
}

TEST_CASE("weight subadditivity") {
    Rng rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        BitVector a(40), b(40);
        for (std::size_t i = 0; i < 40; ++i) {
            if (rng.next() & 1) a.set(i);
            if (rng.next() & 1) b.set(i);
        }
        CHECK((a ^ b).weight() <= a.weight() + b.weight());
    }
}

TEST_CASE("co-rank of H_J equals shortened-code dimension (Lemma property)") {
    for (int trial = 0; trial < 100; ++trial) {
        EnsembleSpec spec{3, 6, 12};
        Code code(sample_a(spec, 7000 + trial));
        Rng rng(trial);
        std::size_t isize = 4 + rng.below(7);
        auto I = rng.subset(12, isize);
        std::sort(I.begin(), I.end());
        std::vector<std::size_t> J;
        std::vector<bool> in_i(12, false);
        for (auto p : I) in_i[p] = true;
        for (std::size_t c = 0; c < 12; ++c)
            if (!in_i[c]) J.push_back(c);
        std::size_t b = corank(column_submatrix(code.h(), J));
        CHECK(b == oracles::naive_shortened_dim(code, I));
    }
}
